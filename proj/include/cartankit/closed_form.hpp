#ifndef CARTANKIT_CLOSED_FORM_HPP
#define CARTANKIT_CLOSED_FORM_HPP

#include "cartankit/family.hpp"
#include "cartankit/matrix.hpp"

namespace cartankit {

// O(1)-per-entry evaluators for the inverse Cartan matrices. All indices are
// 1-based, matching the formula subscripts.

Rational inv_entry_A(long n, long i, long j);
Rational inv_entry_B(long n, long i, long j);
Rational inv_entry_C(long n, long i, long j);
Rational inv_entry_D(long n, long i, long j);
Rational inv_entry_S(long n, long i, long j);
Rational inv_entry_R(long n, long i, long j);

Rational inv_entry_superA(long m, long n, long i, long j);
Rational inv_entry_superB(long m, long n, long i, long j);
Rational inv_entry_superB0(long n, long i, long j);
Rational inv_entry_superC(long n, long i, long j);
Rational inv_entry_superD1(long m, long i, long j);          // D(m,1)
Rational inv_entry_superD(long m, long n, long i, long j);   // D(m,n), n >= 2

// Stored exact inverses of the exceptional Cartan matrices; alpha is required
// exactly for D21Alpha.
Matrix inverse_exceptional(Family name, const std::optional<Rational>& alpha = std::nullopt);

// Materializes the full inverse from the entry formulas. Never eliminates.
Matrix inverse_matrix(const FamilySpec& spec);

// Reconstructs the inverse exclusively through rank-one-update / block-inverse
// compositions rooted at the S_n^{-1} closed form. Not defined for the stored
// exceptional inverses (throws InvalidParams).
Matrix inverse_via_proof_path(const FamilySpec& spec);
bool has_proof_path(const FamilySpec& spec);

enum class SpecialVectorKind { Ascending, Descending, Ones, B, D, DProof };

struct SpecialVector {
    SpecialVectorKind kind;
    std::size_t length;
    Vector entries;
};

// Ascending (1..n), descending (n..1), ones, b_m = (1,..,1,1/2),
// d_k = (1,..,1,1/2,1/2), and the D-proof vector (1,..,n-2,(n-2)/2).
// For DProof the argument is the rank n and the vector has n-1 entries;
// everywhere else the argument is the vector length.
SpecialVector special_vector(SpecialVectorKind kind, std::size_t length);

} // namespace cartankit

#endif
