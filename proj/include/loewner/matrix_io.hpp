#pragma once

#include <string>

#include "json.hpp"

#include "loewner/complex_matrix.hpp"

namespace loewner {

/// Parses either accepted matrix format, chosen by the first non-space byte:
/// '{' selects the structured object {"n": N, "data": [[re,im], ...]} with
/// n*n row-major pairs, '[' selects the array-of-rows form [[[re,im], ...],
/// ...], and anything else selects the text grid of re+imj tokens with one
/// row per line ('#' lines and blank lines are skipped). Throws ParseError
/// with a 1-based position or DimensionError on inconsistent counts.
ComplexMatrix parse_matrix(const std::string& text);

/// Text grid with one row per line and %.17g re+imj tokens; parsing the
/// output reproduces the input bit-for-bit.
std::string format_matrix_grid(const ComplexMatrix& m);

/// {"n": N, "data": [[re,im], ...]} row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);

ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// %.17g, the shortest printf format that round-trips every double.
std::string format_double(double value);

/// re+imj with both parts in %.17g.
std::string format_complex_token(Complex value);

} // namespace loewner
