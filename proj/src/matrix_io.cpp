#include "loewner/matrix_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <utility>
#include <vector>

namespace loewner {

namespace {

struct Position {
    int line;
    int column;
};

Position position_of_offset(const std::string& text, std::size_t offset) {
    if (offset > text.size()) offset = text.size();
    int line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++line;
            line_start = i + 1;
        }
    }
    return {line, static_cast<int>(offset - line_start) + 1};
}

ComplexMatrix matrix_from_flat_pairs(int n, const nlohmann::json& data) {
    if (!data.is_array()) throw ParseError("\"data\" must be an array", 1, 1);
    if (static_cast<long long>(data.size()) != static_cast<long long>(n) * n) {
        throw DimensionError("expected " + std::to_string(n) + "*" + std::to_string(n) +
                             " = " + std::to_string(static_cast<long long>(n) * n) +
                             " entries, got " + std::to_string(data.size()));
    }
    std::vector<Complex> entries;
    entries.reserve(data.size());
    for (const auto& pair : data) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
            !pair[1].is_number()) {
            throw ParseError("each entry must be a [re, im] pair of numbers", 1, 1);
        }
        entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return ComplexMatrix(n, std::move(entries));
}

ComplexMatrix parse_structured(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const Position pos = position_of_offset(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(std::string("invalid structured input: ") + e.what(),
                         pos.line, pos.column);
    } catch (const nlohmann::json::exception& e) {
        // Number overflow and kin surface as other json exception types.
        throw ParseError(std::string("invalid structured input: ") + e.what(), 1, 1);
    }

    if (j.is_object()) return matrix_from_json(j);

    if (j.is_array()) {
        const int n = static_cast<int>(j.size());
        if (n == 0) throw DimensionError("matrix has no rows");
        std::vector<Complex> entries;
        entries.reserve(static_cast<std::size_t>(n) * n);
        for (const auto& row : j) {
            if (!row.is_array()) throw ParseError("each row must be an array", 1, 1);
            if (static_cast<int>(row.size()) != n) {
                throw DimensionError("row has " + std::to_string(row.size()) +
                                     " entries, expected " + std::to_string(n));
            }
            for (const auto& pair : row) {
                if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                    !pair[1].is_number()) {
                    throw ParseError("each entry must be a [re, im] pair of numbers", 1,
                                     1);
                }
                entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
            }
        }
        return ComplexMatrix(n, std::move(entries));
    }
    throw ParseError("structured input must be an object or an array", 1, 1);
}

Complex parse_token(const std::string& token, int line, int column) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double re = std::strtod(begin, &end);
    if (end == begin) {
        throw ParseError("expected a number, got \"" + token + "\"", line, column);
    }
    if (!std::isfinite(re)) {
        throw ParseError("non-finite real part in \"" + token + "\"", line, column);
    }
    if (*end == '\0') return Complex(re, 0.0);

    if (*end != '+' && *end != '-') {
        throw ParseError("expected +imj or -imj after the real part in \"" + token +
                             "\"",
                         line, column);
    }
    const char* imag_begin = end;
    const double im = std::strtod(imag_begin, &end);
    if (end == imag_begin) {
        throw ParseError("expected an imaginary part in \"" + token + "\"", line,
                         column);
    }
    if (!std::isfinite(im)) {
        throw ParseError("non-finite imaginary part in \"" + token + "\"", line,
                         column);
    }
    if (*end != 'j' || *(end + 1) != '\0') {
        throw ParseError("imaginary part must end in j in \"" + token + "\"", line,
                         column);
    }
    return Complex(re, im);
}

ComplexMatrix parse_grid(const std::string& text) {
    struct Token {
        std::string text;
        int line;
        int column;
    };
    std::vector<std::vector<Token>> rows;

    int line_number = 0;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string::npos) line_end = text.size();
        ++line_number;
        const std::string line = text.substr(line_start, line_end - line_start);

        std::vector<Token> row;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() &&
                   std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            if (i >= line.size()) break;
            if (row.empty() && line[i] == '#') break;
            std::size_t start = i;
            while (i < line.size() &&
                   !std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            row.push_back({line.substr(start, i - start), line_number,
                           static_cast<int>(start) + 1});
        }
        if (!row.empty()) rows.push_back(std::move(row));

        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }

    const int n = static_cast<int>(rows.size());
    if (n == 0) throw DimensionError("matrix has no rows");
    std::vector<Complex> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) {
            throw DimensionError("line " + std::to_string(row.front().line) + " has " +
                                 std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(n));
        }
        for (const auto& token : row)
            entries.push_back(parse_token(token.text, token.line, token.column));
    }
    return ComplexMatrix(n, std::move(entries));
}

} // namespace

ComplexMatrix parse_matrix(const std::string& text) {
    std::size_t first = 0;
    while (first < text.size() &&
           std::isspace(static_cast<unsigned char>(text[first])))
        ++first;
    if (first == text.size()) throw DimensionError("matrix has no rows");
    if (text[first] == '{' || text[first] == '[') return parse_structured(text);
    return parse_grid(text);
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string format_complex_token(Complex value) {
    char buffer[128];
    std::snprintf(buffer, sizeof(buffer), "%.17g%+.17gj", value.real(), value.imag());
    return buffer;
}

std::string format_matrix_grid(const ComplexMatrix& m) {
    std::string out;
    const int n = m.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j > 0) out += ' ';
            out += format_complex_token(m(i, j));
        }
        out += '\n';
    }
    return out;
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json data = nlohmann::json::array();
    const int n = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            data.push_back({m(i, j).real(), m(i, j).imag()});
    return {{"n", n}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("data")) {
        throw ParseError("structured matrix needs \"n\" and \"data\" fields", 1, 1);
    }
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) {
        throw DimensionError("\"n\" must be a positive integer");
    }
    if (j["n"].get<long long>() > 4096) {
        throw DimensionError("\"n\" is implausibly large");
    }
    return matrix_from_flat_pairs(static_cast<int>(j["n"].get<long long>()), j["data"]);
}

} // namespace loewner
