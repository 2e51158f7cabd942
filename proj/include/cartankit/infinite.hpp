#ifndef CARTANKIT_INFINITE_HPP
#define CARTANKIT_INFINITE_HPP

#include <string>
#include <vector>

#include "cartankit/matrix.hpp"

namespace cartankit {

// The seven infinite families, by their vertex label sets:
//   AInfPos      {1, 2, ...}
//   AInfNeg      {..., -2, -1}
//   BInf         {..., -1, 0}
//   DInf         {..., -2, -1} + {0, 1}       (fork at 0 and 1)
//   SuperAmInf   {1, .., m+1} + {m+2, ...}    (isotropic node m+1), m >= 0
//   SuperAInfInf all integers                 (isotropic node 0)
//   SuperBmInf   {..., -1, 0} + {1, .., m}    (isotropic node 0), m >= 1
//   SuperDmInf   {..., -1, 0} + {1, .., m}    (isotropic node 0), m >= 2
enum class InfFamily {
    AInfPos, AInfNeg, BInf, DInf,
    SuperAmInf, SuperAInfInf, SuperBmInf, SuperDmInf,
};

struct InfFamilySpec {
    InfFamily family = InfFamily::AInfPos;
    long m = 0;
    // Naive-literal boundary variant for SuperBmInf m = 1 (connection entry
    // -1 instead of -2); demonstrably fails the product identity.
    bool literal_blocks = false;
};

void validate(const InfFamilySpec& spec);
bool in_index_set(const InfFamilySpec& spec, long label);

std::string inf_family_name(InfFamily f);
InfFamily inf_family_from_name(const std::string& name);

// Lazy entry oracles, both banded Cartan side and closed-form inverse side.
Rational inf_cartan_entry(const InfFamilySpec& spec, long i, long j);
Rational inf_inverse_entry(const InfFamilySpec& spec, long i, long j);

struct Window {
    long lo = 0;
    long hi = 0;
};

enum class WindowSide { Cartan, Inverse };

struct WindowMatrix {
    std::vector<long> labels;  // increasing
    Matrix mat;
};

WindowMatrix materialize(const InfFamilySpec& spec, const Window& window, WindowSide side);

struct VerificationFailure {
    long i = 0;
    long j = 0;
    Rational expected;
    Rational actual;
};

struct VerificationReport {
    std::size_t checked_pairs = 0;
    std::vector<VerificationFailure> failures;
    bool passed = false;
};

// Two-sided windowed product identity: for every (i, j) in the window checks
// sum_k M_{ik} Minv_{kj} = delta_ij and sum_k Minv_{ik} M_{kj} = delta_ij,
// with k over the full index set (a finite sum: Cartan rows/columns have
// nonzeros only within graph distance <= 2 of the diagonal label).
VerificationReport verify_window(const InfFamilySpec& spec, const Window& window);

} // namespace cartankit

#endif
