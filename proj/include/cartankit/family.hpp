#ifndef CARTANKIT_FAMILY_HPP
#define CARTANKIT_FAMILY_HPP

#include <optional>
#include <string>

#include "cartankit/rational.hpp"

namespace cartankit {

enum class Family {
    A, B, C, D, S, R,
    E6, E7, E8, F4, G2,
    SuperA, SuperB, SuperB0, SuperC, SuperD,
    D21Alpha, SuperF4, SuperG3,
};

// Parameter letters follow the usual conventions: n is the rank parameter,
// m the even-part parameter of the super families, alpha the D(2,1;alpha)
// deformation parameter.
struct FamilySpec {
    Family family = Family::A;
    long m = 0;
    long n = 0;
    std::optional<Rational> alpha;

    static FamilySpec simple(Family f, long n) { return {f, 0, n, std::nullopt}; }
    static FamilySpec super(Family f, long m, long n) { return {f, m, n, std::nullopt}; }
    static FamilySpec exceptional(Family f) { return {f, 0, 0, std::nullopt}; }
    static FamilySpec d21(const Rational& a) { return {Family::D21Alpha, 0, 0, a}; }
};

bool is_simple_lie(Family f);      // A, B, C, D, E6..G2 (not the S/R auxiliaries)
bool is_super(Family f);
bool is_exceptional(Family f);     // E6, E7, E8, F4, G2, D21Alpha, SuperF4, SuperG3

// Throws InvalidParams naming the violated bound.
void validate(const FamilySpec& spec);

std::size_t size_of(const FamilySpec& spec);

std::string family_name(Family f);
Family family_from_name(const std::string& name);
std::string describe(const FamilySpec& spec);

} // namespace cartankit

#endif
