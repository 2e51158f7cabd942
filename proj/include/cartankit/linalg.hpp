#ifndef CARTANKIT_LINALG_HPP
#define CARTANKIT_LINALG_HPP

#include "cartankit/matrix.hpp"

namespace cartankit {

// Exact Gauss-Jordan elimination with the first nonzero pivot in column order.
// Throws SingularError (carrying the rank found) on singular input.
Matrix invert_exact(const Matrix& m);

// (A + c d^T)^{-1} from A^{-1} via the rank-one updating formula
//   (A + c d^T)^{-1} = A^{-1} - A^{-1} c d^T A^{-1} / (1 + d^T A^{-1} c).
// Throws UpdateSingularError when the denominator vanishes.
Matrix rank_one_update_inverse(const Matrix& a_inv, const Vector& c, const Vector& d);

// Inverse of [[T, U], [V, W]] from T^{-1} via the Schur complement S = W - V T^{-1} U:
//   [[T^{-1} + T^{-1} U S^{-1} V T^{-1},  -T^{-1} U S^{-1}],
//    [-S^{-1} V T^{-1},                    S^{-1}]].
// The plain overload inverts S by elimination; the _with overload takes a
// precomputed S^{-1} so update pipelines can stay elimination-free.
Matrix block_inverse(const Matrix& t_inv, const Matrix& u, const Matrix& v, const Matrix& w);
Matrix block_inverse_with(const Matrix& t_inv, const Matrix& u, const Matrix& v,
                          const Matrix& w, const Matrix& s_inv);

} // namespace cartankit

#endif
