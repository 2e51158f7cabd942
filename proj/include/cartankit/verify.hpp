#ifndef CARTANKIT_VERIFY_HPP
#define CARTANKIT_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "cartankit/family.hpp"
#include "cartankit/matrix.hpp"

namespace cartankit {

// Full equivalence check for one spec: formula inverse vs elimination oracle
// vs update-pipeline reconstruction (where one exists), plus both product
// identities. Returns a human-readable description of the first mismatch, or
// nullopt when everything agrees exactly.
std::optional<std::string> check_spec(const FamilySpec& spec, bool literal_blocks = false);

struct GridCaps {
    long simple_max = 64;   // A 1..max; B, C, D 2..max; S 1..max; R 2..max
    long super_max = 32;    // super family parameter cap
};

// The default verification grid: every valid spec within the caps, the
// exceptional families, and a built-in rational sample list for alpha.
std::vector<FamilySpec> default_grid(const GridCaps& caps = {});

const std::vector<Rational>& default_alpha_samples();

} // namespace cartankit

#endif
