#include "cartankit/verify.hpp"

#include "cartankit/catalog.hpp"
#include "cartankit/closed_form.hpp"
#include "cartankit/errors.hpp"
#include "cartankit/linalg.hpp"

namespace cartankit {

namespace {

std::optional<std::string> first_difference(const std::string& label, const Matrix& expected,
                                            const Matrix& actual) {
    if (expected.rows() != actual.rows() || expected.cols() != actual.cols())
        return label + ": shape mismatch";
    for (std::size_t i = 0; i < expected.rows(); ++i)
        for (std::size_t j = 0; j < expected.cols(); ++j)
            if (expected(i, j) != actual(i, j))
                return label + ": first differing entry (" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + ") expected " + to_string(expected(i, j)) +
                       " actual " + to_string(actual(i, j));
    return std::nullopt;
}

} // namespace

std::optional<std::string> check_spec(const FamilySpec& spec, bool literal_blocks) {
    const std::string who = describe(spec);
    const Matrix cartan = build(spec, literal_blocks);
    const Matrix formula = inverse_matrix(spec);

    Matrix oracle;
    try {
        oracle = invert_exact(cartan);
    } catch (const SingularError& e) {
        return who + ": oracle reports singular Cartan matrix: " + e.what();
    }
    if (auto diff = first_difference(who + " formula-vs-oracle", formula, oracle)) return diff;

    if (has_proof_path(spec)) {
        const Matrix proof = inverse_via_proof_path(spec);
        if (auto diff = first_difference(who + " formula-vs-proof-path", formula, proof))
            return diff;
    }

    if (!is_identity(mat_mul(cartan, formula)))
        return who + ": M * Minv is not the identity";
    if (!is_identity(mat_mul(formula, cartan)))
        return who + ": Minv * M is not the identity";
    return std::nullopt;
}

const std::vector<Rational>& default_alpha_samples() {
    static const std::vector<Rational> samples = {
        Rational(1, 2), Rational(2), Rational(-3), Rational(7, 5),
    };
    return samples;
}

std::vector<FamilySpec> default_grid(const GridCaps& caps) {
    std::vector<FamilySpec> grid;
    for (long n = 1; n <= caps.simple_max; ++n) grid.push_back(FamilySpec::simple(Family::A, n));
    for (long n = 2; n <= caps.simple_max; ++n) {
        grid.push_back(FamilySpec::simple(Family::B, n));
        grid.push_back(FamilySpec::simple(Family::C, n));
        grid.push_back(FamilySpec::simple(Family::D, n));
        grid.push_back(FamilySpec::simple(Family::R, n));
    }
    for (long n = 1; n <= caps.simple_max; ++n) grid.push_back(FamilySpec::simple(Family::S, n));

    for (long m = 0; m <= caps.super_max; ++m)
        for (long n = 0; n <= caps.super_max; ++n)
            if (m != n) grid.push_back(FamilySpec::super(Family::SuperA, m, n));
    for (long m = 1; m <= caps.super_max; ++m)
        for (long n = 1; n <= caps.super_max; ++n)
            grid.push_back(FamilySpec::super(Family::SuperB, m, n));
    for (long n = 2; n <= caps.super_max; ++n) {
        grid.push_back(FamilySpec::simple(Family::SuperB0, n));
        grid.push_back(FamilySpec::simple(Family::SuperC, n));
    }
    for (long m = 2; m <= caps.super_max; ++m)
        for (long n = 1; n <= caps.super_max; ++n)
            grid.push_back(FamilySpec::super(Family::SuperD, m, n));

    for (Family f : {Family::E6, Family::E7, Family::E8, Family::F4, Family::G2,
                     Family::SuperF4, Family::SuperG3})
        grid.push_back(FamilySpec::exceptional(f));
    for (const Rational& a : default_alpha_samples()) grid.push_back(FamilySpec::d21(a));
    return grid;
}

} // namespace cartankit
