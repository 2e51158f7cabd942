#ifndef CARTANKIT_CATALOG_HPP
#define CARTANKIT_CATALOG_HPP

#include "cartankit/family.hpp"
#include "cartankit/matrix.hpp"

namespace cartankit {

// Validated constructors for the finite Cartan matrices and the S/R
// auxiliaries. `literal_blocks` selects the degenerate-case block readings
// that are printed but inconsistent with the inverse formulas:
//   - B(1,n): isotropic row entry toward the short root is -1 instead of -2;
//   - C(2): derived from that B(1,1) variant via the negative transpose;
//   - D(m,n) with m = 2, n >= 2: the isotropic node connects to only one
//     fork node (a singular matrix).
// They exist so the mismatches can be demonstrated, never for production use.

Matrix build_simple(const FamilySpec& spec);
Matrix build_super(const FamilySpec& spec, bool literal_blocks = false);

// Dispatch over the two constructors above.
Matrix build(const FamilySpec& spec, bool literal_blocks = false);

} // namespace cartankit

#endif
