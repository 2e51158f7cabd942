#include <doctest.h>

#include <random>

#include "cartankit/catalog.hpp"
#include "cartankit/closed_form.hpp"
#include "cartankit/render.hpp"

using namespace cartankit;

TEST_CASE("format names") {
    CHECK(format_from_name("json") == OutputFormat::Json);
    CHECK(format_from_name("CSV") == OutputFormat::Csv);
    CHECK(format_from_name("LaTeX") == OutputFormat::Latex);
    CHECK(format_from_name("pretty") == OutputFormat::Pretty);
    CHECK_THROWS_AS(format_from_name("xml"), InvalidParams);
}

TEST_CASE("csv rendering") {
    Matrix m = {{Rational(1, 2), -1}, {0, Rational(-3, 4)}};
    CHECK(render_matrix(m, OutputFormat::Csv) == "1/2,-1\n0,-3/4\n");
}

TEST_CASE("latex rendering uses \\frac and pmatrix") {
    Matrix m = {{Rational(1, 2), -1}, {0, Rational(-3, 4)}};
    CHECK(render_matrix(m, OutputFormat::Latex) ==
          "\\begin{pmatrix}\n"
          "\\frac{1}{2} & -1 \\\\\n"
          "0 & -\\frac{3}{4}\n"
          "\\end{pmatrix}\n");
}

TEST_CASE("pretty rendering right-aligns columns") {
    Matrix m = {{Rational(1, 2), -1}, {0, Rational(-3, 4)}};
    CHECK(render_matrix(m, OutputFormat::Pretty) ==
          "1/2    -1\n"
          "  0  -3/4\n");
}

TEST_CASE("json carries family, params, and rows of rational strings") {
    FamilySpec spec = FamilySpec::super(Family::SuperB, 1, 1);
    const std::string text = render_json(spec, inverse_matrix(spec));
    const JsonMatrix parsed = parse_json(text);
    CHECK(parsed.family == "superB");
    CHECK(parsed.m == 1);
    CHECK(parsed.n == 1);
    CHECK_FALSE(parsed.alpha.has_value());
    CHECK(parsed.matrix == Matrix{{-1, -1}, {Rational(-1, 2), 0}});
}

TEST_CASE("json keeps alpha exact") {
    FamilySpec spec = FamilySpec::d21(Rational(7, 5));
    const std::string text = render_json(spec, build(spec));
    const JsonMatrix parsed = parse_json(text);
    CHECK(parsed.alpha == Rational(7, 5));
    CHECK(parsed.matrix(0, 2) == Rational(7, 5));
}

TEST_CASE("json round-trip is byte-identical for random specs") {
    std::mt19937 rng(424243);
    std::uniform_int_distribution<long> pick(0, 3);
    std::uniform_int_distribution<long> rank(2, 9);
    for (int trial = 0; trial < 20; ++trial) {
        FamilySpec spec;
        switch (pick(rng)) {
            case 0: spec = FamilySpec::simple(Family::B, rank(rng)); break;
            case 1: {
                long m = rank(rng), n = rank(rng);
                if (m == n) ++n;
                spec = FamilySpec::super(Family::SuperA, m, n);
                break;
            }
            case 2: spec = FamilySpec::super(Family::SuperD, rank(rng), rank(rng)); break;
            default: spec = FamilySpec::d21(make_rational(rank(rng), 3)); break;
        }
        const std::string emitted = render_json(spec, inverse_matrix(spec));
        CHECK(reemit_json(parse_json(emitted)) == emitted);
    }
}

TEST_CASE("parse_json rejects ragged rows") {
    CHECK_THROWS_AS(
        parse_json(R"({"family":"A","params":{"m":0,"n":2},"rows":[["1","2"],["3"]]})"),
        InvalidParams);
}
