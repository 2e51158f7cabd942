// pybind11 bindings. Matrices cross the boundary as lists of rows of exact
// rational strings ("p/q", "/q" omitted for integers) so no precision is lost.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cartankit/catalog.hpp"
#include "cartankit/closed_form.hpp"
#include "cartankit/infinite.hpp"
#include "cartankit/linalg.hpp"
#include "cartankit/render.hpp"
#include "cartankit/verify.hpp"

namespace py = pybind11;
using namespace cartankit;

namespace {

using Rows = std::vector<std::vector<std::string>>;

Rows to_rows(const Matrix& m) {
    Rows rows(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = to_string(m(i, j));
    return rows;
}

Matrix from_rows(const Rows& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionError("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = parse_rational(rows[i][j]);
    }
    return m;
}

FamilySpec make_spec(const std::string& family, long m, long n,
                     const std::optional<std::string>& alpha) {
    FamilySpec spec;
    spec.family = family_from_name(family);
    spec.m = m;
    spec.n = n;
    if (alpha) spec.alpha = parse_rational(*alpha);
    validate(spec);
    return spec;
}

InfFamilySpec make_inf_spec(const std::string& family, long m, bool literal_blocks) {
    InfFamilySpec spec{inf_family_from_name(family), m, literal_blocks};
    validate(spec);
    return spec;
}

} // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Cartan matrices of the classical Lie (super)algebras and their exact inverses";

    py::register_exception<InvalidParams>(mod, "InvalidParamsError", PyExc_ValueError);
    py::register_exception<SingularError>(mod, "SingularError", PyExc_ArithmeticError);

    mod.def(
        "build",
        [](const std::string& family, long m, long n, const std::optional<std::string>& alpha,
           bool literal_blocks) {
            return to_rows(build(make_spec(family, m, n, alpha), literal_blocks));
        },
        py::arg("family"), py::arg("m") = 0, py::arg("n") = 0, py::arg("alpha") = py::none(),
        py::arg("literal_blocks") = false,
        "Cartan matrix of a finite family, as rows of rational strings");

    mod.def(
        "inverse",
        [](const std::string& family, long m, long n, const std::optional<std::string>& alpha,
           const std::string& method) {
            const FamilySpec spec = make_spec(family, m, n, alpha);
            if (method == "formula") return to_rows(inverse_matrix(spec));
            if (method == "oracle") return to_rows(invert_exact(build(spec)));
            if (method == "proof") return to_rows(inverse_via_proof_path(spec));
            throw InvalidParams("unknown method '" + method + "'");
        },
        py::arg("family"), py::arg("m") = 0, py::arg("n") = 0, py::arg("alpha") = py::none(),
        py::arg("method") = "formula",
        "Exact inverse via the closed form, the elimination oracle, or the update pipeline");

    mod.def(
        "invert",
        [](const Rows& rows) { return to_rows(invert_exact(from_rows(rows))); },
        py::arg("rows"), "Exact Gauss-Jordan inverse of an arbitrary rational matrix");

    mod.def(
        "inverse_entry",
        [](const std::string& family, long m, long n, long i, long j) {
            const FamilySpec spec = make_spec(family, m, n, std::nullopt);
            return to_string(inverse_matrix(spec)(i - 1, j - 1));
        },
        py::arg("family"), py::arg("m"), py::arg("n"), py::arg("i"), py::arg("j"),
        "Single 1-based inverse entry");

    mod.def(
        "check",
        [](const std::string& family, long m, long n, const std::optional<std::string>& alpha,
           bool literal_blocks) -> std::optional<std::string> {
            return check_spec(make_spec(family, m, n, alpha), literal_blocks);
        },
        py::arg("family"), py::arg("m") = 0, py::arg("n") = 0, py::arg("alpha") = py::none(),
        py::arg("literal_blocks") = false,
        "Formula-vs-oracle-vs-proof-path check; None on agreement, else the first mismatch");

    mod.def(
        "window",
        [](const std::string& family, long m, long lo, long hi, const std::string& side,
           bool literal_blocks) {
            const InfFamilySpec spec = make_inf_spec(family, m, literal_blocks);
            const WindowSide s = side == "cartan" ? WindowSide::Cartan : WindowSide::Inverse;
            auto wm = materialize(spec, {lo, hi}, s);
            return py::make_tuple(wm.labels, to_rows(wm.mat));
        },
        py::arg("family"), py::arg("m"), py::arg("lo"), py::arg("hi"),
        py::arg("side") = "cartan", py::arg("literal_blocks") = false,
        "(labels, rows) for a window of an infinite family");

    mod.def(
        "verify_window",
        [](const std::string& family, long m, long lo, long hi, bool literal_blocks) {
            const auto report =
                verify_window(make_inf_spec(family, m, literal_blocks), {lo, hi});
            py::list failures;
            for (const auto& f : report.failures)
                failures.append(py::make_tuple(f.i, f.j, to_string(f.expected),
                                               to_string(f.actual)));
            py::dict out;
            out["checked_pairs"] = report.checked_pairs;
            out["failures"] = failures;
            out["passed"] = report.passed;
            return out;
        },
        py::arg("family"), py::arg("m"), py::arg("lo"), py::arg("hi"),
        py::arg("literal_blocks") = false,
        "Two-sided windowed product-identity check");

    mod.def(
        "to_json",
        [](const std::string& family, long m, long n, const std::optional<std::string>& alpha,
           const Rows& rows) {
            const FamilySpec spec = make_spec(family, m, n, alpha);
            return render_json(spec, from_rows(rows));
        },
        py::arg("family"), py::arg("m"), py::arg("n"), py::arg("alpha"), py::arg("rows"));

    mod.def("from_json", [](const std::string& text) {
        const JsonMatrix parsed = parse_json(text);
        py::dict out;
        out["family"] = parsed.family;
        out["m"] = parsed.m;
        out["n"] = parsed.n;
        out["alpha"] = parsed.alpha ? py::cast(to_string(*parsed.alpha)) : py::none();
        out["rows"] = to_rows(parsed.matrix);
        return out;
    });

    mod.def("describe", [](const std::string& family, long m, long n,
                           const std::optional<std::string>& alpha) {
        return describe(make_spec(family, m, n, alpha));
    }, py::arg("family"), py::arg("m") = 0, py::arg("n") = 0, py::arg("alpha") = py::none());
}
