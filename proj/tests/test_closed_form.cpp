#include <doctest.h>

#include "cartankit/catalog.hpp"
#include "cartankit/closed_form.hpp"
#include "cartankit/linalg.hpp"

using namespace cartankit;

namespace {
Rational half(long p) { return make_rational(p, 2); }
}

TEST_CASE("frozen inverses, classical families") {
    CHECK(inverse_matrix(FamilySpec::simple(Family::A, 4)) ==
          Matrix{{make_rational(4, 5), make_rational(3, 5), make_rational(2, 5), make_rational(1, 5)},
                 {make_rational(3, 5), make_rational(6, 5), make_rational(4, 5), make_rational(2, 5)},
                 {make_rational(2, 5), make_rational(4, 5), make_rational(6, 5), make_rational(3, 5)},
                 {make_rational(1, 5), make_rational(2, 5), make_rational(3, 5), make_rational(4, 5)}});
    CHECK(inverse_matrix(FamilySpec::simple(Family::B, 4)) ==
          Matrix{{1, 1, 1, 1}, {1, 2, 2, 2}, {1, 2, 3, 3}, {half(1), 1, half(3), 2}});
    CHECK(inverse_matrix(FamilySpec::simple(Family::C, 4)) ==
          inverse_matrix(FamilySpec::simple(Family::B, 4)).transpose());
    CHECK(inverse_matrix(FamilySpec::simple(Family::D, 4)) ==
          Matrix{{1, 1, half(1), half(1)},
                 {1, 2, 1, 1},
                 {half(1), 1, 1, half(1)},
                 {half(1), 1, half(1), 1}});
    CHECK(inverse_matrix(FamilySpec::simple(Family::D, 5)) ==
          Matrix{{1, 1, 1, half(1), half(1)},
                 {1, 2, 2, 1, 1},
                 {1, 2, 3, half(3), half(3)},
                 {half(1), 1, half(3), make_rational(5, 4), make_rational(3, 4)},
                 {half(1), 1, half(3), make_rational(3, 4), make_rational(5, 4)}});
    CHECK(inverse_matrix(FamilySpec::simple(Family::S, 4)) ==
          Matrix{{1, 1, 1, 1}, {1, 2, 2, 2}, {1, 2, 3, 3}, {1, 2, 3, 4}});
    CHECK(inverse_matrix(FamilySpec::simple(Family::R, 4)) ==
          Matrix{{make_rational(2, 3), make_rational(1, 3), 0, make_rational(-1, 3)},
                 {make_rational(1, 3), make_rational(2, 3), 0, make_rational(-2, 3)},
                 {0, 0, 0, -1},
                 {make_rational(-1, 3), make_rational(-2, 3), -1, make_rational(-4, 3)}});
}

TEST_CASE("frozen inverses, super families") {
    CHECK(inverse_matrix(FamilySpec::super(Family::SuperA, 2, 0)) ==
          Matrix{{half(1), 0, half(-1)}, {0, 0, -1}, {half(-1), -1, half(-3)}});
    CHECK(inverse_matrix(FamilySpec::super(Family::SuperA, 0, 2)) ==
          Matrix{{half(3), 1, half(1)}, {1, 0, 0}, {half(1), 0, half(-1)}});
    CHECK(inverse_matrix(FamilySpec::super(Family::SuperA, 2, 3)) ==
          Matrix{{2, 3, 4, 3, 2, 1},
                 {3, 6, 8, 6, 4, 2},
                 {4, 8, 12, 9, 6, 3},
                 {3, 6, 9, 6, 4, 2},
                 {2, 4, 6, 4, 2, 1},
                 {1, 2, 3, 2, 1, 0}});
    CHECK(inverse_matrix(FamilySpec::super(Family::SuperB, 1, 1)) ==
          Matrix{{-1, -1}, {half(-1), 0}});
    CHECK(inverse_matrix(FamilySpec::super(Family::SuperB, 2, 2)) ==
          Matrix{{-1, -1, -1, -1},
                 {-1, -2, -2, -2},
                 {-1, -2, -1, -1},
                 {half(-1), -1, half(-1), 0}});
    CHECK(inverse_matrix(FamilySpec::simple(Family::SuperB0, 3)) ==
          -inverse_matrix(FamilySpec::simple(Family::B, 3)));
    CHECK(inverse_matrix(FamilySpec::simple(Family::SuperC, 3)) ==
          Matrix{{1, 1, half(1)}, {1, 0, 0}, {1, 0, half(-1)}});
    CHECK(inverse_matrix(FamilySpec::super(Family::SuperD, 3, 1)) ==
          Matrix{{-1, -1, half(-1), half(-1)},
                 {-1, 0, 0, 0},
                 {half(-1), 0, half(1), 0},
                 {half(-1), 0, 0, half(1)}});
    CHECK(inverse_matrix(FamilySpec::super(Family::SuperD, 3, 2)) ==
          Matrix{{-1, -1, -1, half(-1), half(-1)},
                 {-1, -2, -2, -1, -1},
                 {-1, -2, -1, half(-1), half(-1)},
                 {half(-1), -1, half(-1), make_rational(1, 4), make_rational(-1, 4)},
                 {half(-1), -1, half(-1), make_rational(-1, 4), make_rational(1, 4)}});
}

TEST_CASE("frozen inverses, exceptional families") {
    CHECK(inverse_exceptional(Family::G2) == Matrix{{2, 1}, {3, 2}});
    CHECK(inverse_exceptional(Family::F4) ==
          Matrix{{2, 3, 4, 2}, {3, 6, 8, 4}, {2, 4, 6, 3}, {1, 2, 3, 2}});
    const Matrix e8 = inverse_exceptional(Family::E8);
    CHECK(e8(3, 3) == 30);       // the largest entry, at the branch node
    CHECK(e8(0, 0) == 4);
    CHECK(inverse_exceptional(Family::SuperF4) ==
          Matrix{{make_rational(2, 3), -1, make_rational(-4, 3), make_rational(-2, 3)},
                 {1, 0, 0, 0},
                 {make_rational(2, 3), 0, make_rational(2, 3), make_rational(1, 3)},
                 {make_rational(1, 3), 0, make_rational(1, 3), make_rational(2, 3)}});
    CHECK(inverse_exceptional(Family::SuperG3) ==
          Matrix{{half(1), -1, half(-3)}, {1, 0, 0}, {half(1), 0, half(1)}});
    CHECK(inverse_exceptional(Family::D21Alpha, Rational(1, 2)) ==
          Matrix{{make_rational(4, 3), make_rational(-2, 3), make_rational(-1, 3)},
                 {make_rational(2, 3), make_rational(1, 6), make_rational(-1, 6)},
                 {make_rational(2, 3), make_rational(-1, 3), make_rational(1, 3)}});
    CHECK_THROWS_AS(inverse_exceptional(Family::D21Alpha), InvalidParams);
    CHECK_THROWS_AS(inverse_exceptional(Family::A), InvalidParams);
}

TEST_CASE("every stored exceptional inverse satisfies both product identities") {
    for (Family f : {Family::E6, Family::E7, Family::E8, Family::F4, Family::G2,
                     Family::SuperF4, Family::SuperG3}) {
        const Matrix cartan = build(FamilySpec::exceptional(f));
        const Matrix inv = inverse_exceptional(f);
        CHECK(is_identity(mat_mul(cartan, inv)));
        CHECK(is_identity(mat_mul(inv, cartan)));
    }
    for (const Rational& a : {Rational(1, 2), Rational(2), Rational(-3)}) {
        const FamilySpec spec = FamilySpec::d21(a);
        CHECK(is_identity(mat_mul(build(spec), inverse_matrix(spec))));
    }
}

TEST_CASE("entry evaluators agree with the materialized matrices") {
    const Matrix b5 = inverse_matrix(FamilySpec::simple(Family::B, 5));
    for (long i = 1; i <= 5; ++i)
        for (long j = 1; j <= 5; ++j) CHECK(inv_entry_B(5, i, j) == b5(i - 1, j - 1));
    CHECK(inv_entry_A(3, 2, 2) == 1);
    CHECK(inv_entry_S(6, 4, 5) == 4);
    CHECK(inv_entry_superB(2, 3, 5, 2) == -1);
    CHECK_THROWS_AS(inv_entry_A(3, 0, 1), InvalidParams);
    CHECK_THROWS_AS(inv_entry_A(3, 1, 4), InvalidParams);
}

TEST_CASE("three-way equivalence on a small grid") {
    std::vector<FamilySpec> grid;
    for (long n = 1; n <= 12; ++n) grid.push_back(FamilySpec::simple(Family::A, n));
    for (long n = 2; n <= 12; ++n) {
        grid.push_back(FamilySpec::simple(Family::B, n));
        grid.push_back(FamilySpec::simple(Family::C, n));
        grid.push_back(FamilySpec::simple(Family::D, n));
        grid.push_back(FamilySpec::simple(Family::R, n));
    }
    for (long n = 1; n <= 12; ++n) grid.push_back(FamilySpec::simple(Family::S, n));
    for (long m = 0; m <= 6; ++m)
        for (long n = 0; n <= 6; ++n)
            if (m != n) grid.push_back(FamilySpec::super(Family::SuperA, m, n));
    for (long m = 1; m <= 6; ++m)
        for (long n = 1; n <= 6; ++n) grid.push_back(FamilySpec::super(Family::SuperB, m, n));
    for (long n = 2; n <= 6; ++n) {
        grid.push_back(FamilySpec::simple(Family::SuperB0, n));
        grid.push_back(FamilySpec::simple(Family::SuperC, n));
    }
    for (long m = 2; m <= 6; ++m)
        for (long n = 1; n <= 6; ++n) grid.push_back(FamilySpec::super(Family::SuperD, m, n));

    for (const FamilySpec& spec : grid) {
        CAPTURE(describe(spec));
        const Matrix formula = inverse_matrix(spec);
        CHECK(formula == invert_exact(build(spec)));
        CHECK(formula == inverse_via_proof_path(spec));
    }
}

TEST_CASE("proof path coverage") {
    CHECK(has_proof_path(FamilySpec::simple(Family::A, 5)));
    CHECK(has_proof_path(FamilySpec::super(Family::SuperD, 2, 4)));
    CHECK_FALSE(has_proof_path(FamilySpec::exceptional(Family::E6)));
    CHECK_FALSE(has_proof_path(FamilySpec::d21(Rational(2))));
    CHECK_THROWS_AS(inverse_via_proof_path(FamilySpec::exceptional(Family::G2)), InvalidParams);
}

TEST_CASE("special vectors") {
    CHECK(special_vector(SpecialVectorKind::Ascending, 4).entries ==
          Vector{1, 2, 3, 4});
    CHECK(special_vector(SpecialVectorKind::Descending, 3).entries == Vector{3, 2, 1});
    CHECK(special_vector(SpecialVectorKind::Ones, 3).entries == Vector{1, 1, 1});
    CHECK(special_vector(SpecialVectorKind::B, 4).entries ==
          Vector{1, 1, 1, half(1)});
    CHECK(special_vector(SpecialVectorKind::D, 5).entries ==
          Vector{1, 1, 1, half(1), half(1)});
    // rank-n argument, n-1 entries
    SpecialVector dp = special_vector(SpecialVectorKind::DProof, 6);
    CHECK(dp.entries == Vector{1, 2, 3, 4, 2});
    CHECK(dp.length == 5);
}
