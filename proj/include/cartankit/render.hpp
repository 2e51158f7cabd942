#ifndef CARTANKIT_RENDER_HPP
#define CARTANKIT_RENDER_HPP

#include <string>

#include "cartankit/family.hpp"
#include "cartankit/matrix.hpp"

namespace cartankit {

enum class OutputFormat { Json, Csv, Latex, Pretty };

OutputFormat format_from_name(const std::string& name);

// All numeric payloads are exact "p/q" strings; no floating point anywhere.
//   csv    one row per line, entries comma-separated
//   latex  pmatrix with \frac{p}{q} entries
//   pretty right-aligned columns
//   json   {"family": ..., "params": {...}, "rows": [[...]]}
std::string render_matrix(const Matrix& m, OutputFormat format);
std::string render_json(const FamilySpec& spec, const Matrix& m);

// Parses render_json output back; emitting the parse again is byte-identical.
struct JsonMatrix {
    std::string family;
    long m = 0;
    long n = 0;
    std::optional<Rational> alpha;
    Matrix matrix;
};
JsonMatrix parse_json(const std::string& text);
std::string reemit_json(const JsonMatrix& parsed);

} // namespace cartankit

#endif
