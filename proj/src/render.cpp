#include "cartankit/render.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "cartankit/errors.hpp"

namespace cartankit {

OutputFormat format_from_name(const std::string& name) {
    std::string key = name;
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (key == "json") return OutputFormat::Json;
    if (key == "csv") return OutputFormat::Csv;
    if (key == "latex") return OutputFormat::Latex;
    if (key == "pretty") return OutputFormat::Pretty;
    throw InvalidParams("unknown format '" + name + "'");
}

namespace {

std::string latex_entry(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    std::string sign = numerator(r) < 0 ? "-" : "";
    Integer num = boost::multiprecision::abs(numerator(r));
    return sign + "\\frac{" + num.str() + "}{" + denominator(r).str() + "}";
}

std::string render_csv(const Matrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << to_string(m(i, j));
        }
        out << '\n';
    }
    return out.str();
}

std::string render_latex(const Matrix& m) {
    std::ostringstream out;
    out << "\\begin{pmatrix}\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << " & ";
            out << latex_entry(m(i, j));
        }
        out << (i + 1 < m.rows() ? " \\\\" : "") << '\n';
    }
    out << "\\end{pmatrix}\n";
    return out.str();
}

std::string render_pretty(const Matrix& m) {
    std::vector<std::size_t> widths(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            widths[j] = std::max(widths[j], to_string(m(i, j)).size());
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::string s = to_string(m(i, j));
            if (j) out << "  ";
            out << std::string(widths[j] - s.size(), ' ') << s;
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::json rows_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string build_json(const std::string& family, long m, long n,
                       const std::optional<Rational>& alpha, const Matrix& mat) {
    nlohmann::json doc;
    doc["family"] = family;
    nlohmann::json params;
    params["m"] = m;
    params["n"] = n;
    if (alpha) params["alpha"] = to_string(*alpha);
    doc["params"] = std::move(params);
    doc["rows"] = rows_json(mat);
    return doc.dump(2) + "\n";
}

} // namespace

std::string render_matrix(const Matrix& m, OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv: return render_csv(m);
        case OutputFormat::Latex: return render_latex(m);
        case OutputFormat::Pretty: return render_pretty(m);
        case OutputFormat::Json: {
            nlohmann::json doc;
            doc["rows"] = rows_json(m);
            return doc.dump(2) + "\n";
        }
    }
    throw InvalidParams("unknown format");
}

std::string render_json(const FamilySpec& spec, const Matrix& m) {
    return build_json(family_name(spec.family), spec.m, spec.n, spec.alpha, m);
}

JsonMatrix parse_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    JsonMatrix out;
    out.family = doc.at("family").get<std::string>();
    out.m = doc.at("params").at("m").get<long>();
    out.n = doc.at("params").at("n").get<long>();
    if (doc.at("params").contains("alpha"))
        out.alpha = parse_rational(doc.at("params").at("alpha").get<std::string>());
    const auto& rows = doc.at("rows");
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.at(0).size() : 0;
    out.matrix = Matrix(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows.at(i).size() != c) throw InvalidParams("json rows are ragged");
        for (std::size_t j = 0; j < c; ++j)
            out.matrix(i, j) = parse_rational(rows.at(i).at(j).get<std::string>());
    }
    return out;
}

std::string reemit_json(const JsonMatrix& parsed) {
    return build_json(parsed.family, parsed.m, parsed.n, parsed.alpha, parsed.matrix);
}

} // namespace cartankit
