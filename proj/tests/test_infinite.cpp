#include <doctest.h>

#include "cartankit/infinite.hpp"
#include "cartankit/errors.hpp"

using namespace cartankit;

namespace {
InfFamilySpec spec_of(InfFamily f, long m = 0, bool literal = false) { return {f, m, literal}; }
}

TEST_CASE("index sets") {
    CHECK(in_index_set(spec_of(InfFamily::AInfPos), 1));
    CHECK_FALSE(in_index_set(spec_of(InfFamily::AInfPos), 0));
    CHECK(in_index_set(spec_of(InfFamily::AInfNeg), -5));
    CHECK_FALSE(in_index_set(spec_of(InfFamily::AInfNeg), 0));
    CHECK(in_index_set(spec_of(InfFamily::BInf), 0));
    CHECK(in_index_set(spec_of(InfFamily::DInf), 1));
    CHECK_FALSE(in_index_set(spec_of(InfFamily::DInf), 2));
    CHECK(in_index_set(spec_of(InfFamily::SuperAInfInf), -100));
    CHECK(in_index_set(spec_of(InfFamily::SuperBmInf, 3), 3));
    CHECK_FALSE(in_index_set(spec_of(InfFamily::SuperBmInf, 3), 4));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate(spec_of(InfFamily::SuperAmInf, -1)), InvalidParams);
    CHECK_THROWS_AS(validate(spec_of(InfFamily::SuperBmInf, 0)), InvalidParams);
    CHECK_THROWS_AS(validate(spec_of(InfFamily::SuperDmInf, 1)), InvalidParams);
    CHECK_NOTHROW(validate(spec_of(InfFamily::SuperDmInf, 2)));
    CHECK_THROWS_AS(inf_cartan_entry(spec_of(InfFamily::AInfPos), 0, 1), InvalidParams);
}

TEST_CASE("Cartan entries, chains and forks") {
    auto apos = spec_of(InfFamily::AInfPos);
    CHECK(inf_cartan_entry(apos, 3, 3) == 2);
    CHECK(inf_cartan_entry(apos, 3, 4) == -1);
    CHECK(inf_cartan_entry(apos, 3, 5) == 0);

    auto binf = spec_of(InfFamily::BInf);
    CHECK(inf_cartan_entry(binf, -1, 0) == -2);   // double edge toward the short root
    CHECK(inf_cartan_entry(binf, 0, -1) == -1);
    CHECK(inf_cartan_entry(binf, -4, -5) == -1);

    auto dinf = spec_of(InfFamily::DInf);
    CHECK(inf_cartan_entry(dinf, 0, 1) == 0);     // fork nodes are not linked
    CHECK(inf_cartan_entry(dinf, -1, 0) == -1);
    CHECK(inf_cartan_entry(dinf, -1, 1) == -1);
    CHECK(inf_cartan_entry(dinf, -2, 1) == 0);
}

TEST_CASE("Cartan entries, super families") {
    auto sa2 = spec_of(InfFamily::SuperAmInf, 2);
    CHECK(inf_cartan_entry(sa2, 3, 3) == 0);      // isotropic node m+1
    CHECK(inf_cartan_entry(sa2, 2, 3) == -1);
    CHECK(inf_cartan_entry(sa2, 3, 4) == 1);
    CHECK(inf_cartan_entry(sa2, 5, 5) == -2);

    auto saii = spec_of(InfFamily::SuperAInfInf);
    CHECK(inf_cartan_entry(saii, 0, 0) == 0);
    CHECK(inf_cartan_entry(saii, 0, -1) == -1);
    CHECK(inf_cartan_entry(saii, 0, 1) == 1);
    CHECK(inf_cartan_entry(saii, -3, -3) == 2);
    CHECK(inf_cartan_entry(saii, 2, 2) == -2);

    auto sb1 = spec_of(InfFamily::SuperBmInf, 1);
    CHECK(inf_cartan_entry(sb1, 0, 1) == -2);     // merged isotropic/short-root edge
    CHECK(inf_cartan_entry(sb1, 1, 0) == -1);
    auto sb3 = spec_of(InfFamily::SuperBmInf, 3);
    CHECK(inf_cartan_entry(sb3, 0, 1) == -1);
    CHECK(inf_cartan_entry(sb3, 2, 3) == -2);     // double edge at the short root
    CHECK(inf_cartan_entry(sb3, 3, 2) == -1);
    CHECK(inf_cartan_entry(sb3, -2, -2) == -2);
    CHECK(inf_cartan_entry(sb3, -1, -2) == 1);

    auto sd2 = spec_of(InfFamily::SuperDmInf, 2);
    CHECK(inf_cartan_entry(sd2, 0, 1) == -1);     // isotropic node links both fork nodes
    CHECK(inf_cartan_entry(sd2, 0, 2) == -1);
    CHECK(inf_cartan_entry(sd2, 1, 2) == 0);
    auto sd4 = spec_of(InfFamily::SuperDmInf, 4);
    CHECK(inf_cartan_entry(sd4, 0, 2) == 0);
    CHECK(inf_cartan_entry(sd4, 2, 3) == -1);
    CHECK(inf_cartan_entry(sd4, 2, 4) == -1);
    CHECK(inf_cartan_entry(sd4, 3, 4) == 0);
}

TEST_CASE("inverse entries") {
    CHECK(inf_inverse_entry(spec_of(InfFamily::AInfPos), 3, 7) == 3);
    CHECK(inf_inverse_entry(spec_of(InfFamily::AInfNeg), -3, -7) == 3);
    CHECK(inf_inverse_entry(spec_of(InfFamily::BInf), 0, -5) == Rational(-5, 2));
    CHECK(inf_inverse_entry(spec_of(InfFamily::BInf), -5, 0) == -5);
    CHECK(inf_inverse_entry(spec_of(InfFamily::DInf), 0, 0) == Rational(1, 4));
    CHECK(inf_inverse_entry(spec_of(InfFamily::DInf), 0, 1) == Rational(-1, 4));
    CHECK(inf_inverse_entry(spec_of(InfFamily::DInf), -3, 1) == Rational(-3, 2));
    CHECK(inf_inverse_entry(spec_of(InfFamily::DInf), -3, -5) == -5);

    CHECK(inf_inverse_entry(spec_of(InfFamily::SuperAmInf, 2), 2, 3) == 2);
    CHECK(inf_inverse_entry(spec_of(InfFamily::SuperAmInf, 2), 2, 9) == 2);
    CHECK(inf_inverse_entry(spec_of(InfFamily::SuperAmInf, 2), 5, 7) == 1);
    CHECK(inf_inverse_entry(spec_of(InfFamily::SuperAInfInf), -2, -4) == -5);
    CHECK(inf_inverse_entry(spec_of(InfFamily::SuperAInfInf), -2, 4) == -3);
    CHECK(inf_inverse_entry(spec_of(InfFamily::SuperAInfInf), 2, 4) == -3);

    CHECK(inf_inverse_entry(spec_of(InfFamily::SuperBmInf, 3), 3, -4) == 2);
    CHECK(inf_inverse_entry(spec_of(InfFamily::SuperBmInf, 3), -4, 3) == 4);
    CHECK(inf_inverse_entry(spec_of(InfFamily::SuperBmInf, 3), 1, 2) == 1);
    CHECK(inf_inverse_entry(spec_of(InfFamily::SuperDmInf, 4), -2, 1) == 2);
    CHECK(inf_inverse_entry(spec_of(InfFamily::SuperDmInf, 4), -2, 4) == 1);
    CHECK(inf_inverse_entry(spec_of(InfFamily::SuperDmInf, 4), 3, 3) == 1);
    CHECK(inf_inverse_entry(spec_of(InfFamily::SuperDmInf, 4), 3, 4) == Rational(1, 2));
}

TEST_CASE("window materialization") {
    auto wm = materialize(spec_of(InfFamily::DInf), {-2, 4}, WindowSide::Cartan);
    CHECK(wm.labels == std::vector<long>{-2, -1, 0, 1});
    CHECK(wm.mat.rows() == 4);
    CHECK(wm.mat(1, 2) == -1);
    CHECK(wm.mat(2, 3) == 0);
    CHECK_THROWS_AS(materialize(spec_of(InfFamily::AInfPos), {-5, 0}, WindowSide::Cartan),
                    InvalidParams);
    CHECK_THROWS_AS(materialize(spec_of(InfFamily::AInfPos), {5, 3}, WindowSide::Cartan),
                    InvalidParams);
}

TEST_CASE("windowed product identities pass for every family") {
    const std::vector<InfFamilySpec> specs = {
        spec_of(InfFamily::AInfPos), spec_of(InfFamily::AInfNeg),
        spec_of(InfFamily::BInf), spec_of(InfFamily::DInf),
        spec_of(InfFamily::SuperAmInf, 0), spec_of(InfFamily::SuperAmInf, 3),
        spec_of(InfFamily::SuperAInfInf),
        spec_of(InfFamily::SuperBmInf, 1), spec_of(InfFamily::SuperBmInf, 4),
        spec_of(InfFamily::SuperDmInf, 2), spec_of(InfFamily::SuperDmInf, 5),
    };
    for (const auto& spec : specs) {
        CAPTURE(inf_family_name(spec.family));
        CAPTURE(spec.m);
        long anchor;
        switch (spec.family) {
            case InfFamily::AInfPos: case InfFamily::SuperAmInf: anchor = 1; break;
            case InfFamily::AInfNeg: anchor = -1; break;
            case InfFamily::BInf: anchor = 0; break;
            case InfFamily::DInf: anchor = 1; break;
            case InfFamily::SuperAInfInf: anchor = 10; break;
            default: anchor = spec.m; break;
        }
        const bool upward =
            spec.family == InfFamily::AInfPos || spec.family == InfFamily::SuperAmInf;
        const Window window = upward ? Window{1, 21} : Window{anchor - 20, anchor};
        const auto report = verify_window(spec, window);
        CHECK(report.passed);
        CHECK(report.checked_pairs > 0);
    }
}

TEST_CASE("the literal boundary variant fails at a pair involving label 1") {
    InfFamilySpec literal = spec_of(InfFamily::SuperBmInf, 1, true);
    const auto report = verify_window(literal, {-6, 1});
    CHECK_FALSE(report.passed);
    bool touches_label_one = false;
    for (const auto& f : report.failures)
        if (f.i == 1 || f.j == 1) touches_label_one = true;
    CHECK(touches_label_one);
    // the corrected variant passes on the same window
    CHECK(verify_window(spec_of(InfFamily::SuperBmInf, 1), {-6, 1}).passed);
}

TEST_CASE("windows are consistent under extension") {
    // entries of a materialized window never depend on the window bounds
    auto spec = spec_of(InfFamily::SuperDmInf, 3);
    auto small = materialize(spec, {-4, 3}, WindowSide::Inverse);
    auto large = materialize(spec, {-9, 3}, WindowSide::Inverse);
    const std::size_t off = large.labels.size() - small.labels.size();
    for (std::size_t a = 0; a < small.labels.size(); ++a)
        for (std::size_t b = 0; b < small.labels.size(); ++b)
            CHECK(small.mat(a, b) == large.mat(a + off, b + off));
}

TEST_CASE("symmetry where the closed forms are symmetric") {
    for (auto spec : {spec_of(InfFamily::AInfPos), spec_of(InfFamily::AInfNeg),
                      spec_of(InfFamily::DInf), spec_of(InfFamily::SuperAmInf, 2),
                      spec_of(InfFamily::SuperAInfInf)}) {
        long hi = spec.family == InfFamily::AInfNeg ? -1
                : spec.family == InfFamily::DInf    ? 1
                : spec.family == InfFamily::SuperAInfInf ? 6 : 12;
        auto wm = materialize(spec, {hi - 12, hi}, WindowSide::Inverse);
        CHECK(wm.mat.is_symmetric());
    }
    // row 0 of the B-type closed form is genuinely asymmetric
    auto wb = materialize(spec_of(InfFamily::BInf), {-4, 0}, WindowSide::Inverse);
    CHECK_FALSE(wb.mat.is_symmetric());
}

TEST_CASE("infinite family names round-trip") {
    for (InfFamily f : {InfFamily::AInfPos, InfFamily::AInfNeg, InfFamily::BInf,
                        InfFamily::DInf, InfFamily::SuperAmInf, InfFamily::SuperAInfInf,
                        InfFamily::SuperBmInf, InfFamily::SuperDmInf})
        CHECK(inf_family_from_name(inf_family_name(f)) == f);
    CHECK_THROWS_AS(inf_family_from_name("Einf"), InvalidParams);
}
