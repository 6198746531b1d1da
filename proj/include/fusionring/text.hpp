#pragma once

// Line tokenizer shared by the ring spec and character table readers.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fusionring/checked.hpp"
#include "fusionring/error.hpp"

namespace fusionring::detail {

struct Token {
    std::string text;
    std::size_t column = 1; // 1-based
};

/// Splits on whitespace, drops '#' comments, and optionally makes each
/// character in `punct` a token of its own.
inline std::vector<Token> tokenize(std::string_view line, std::string_view punct = {}) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (punct.find(c) != std::string_view::npos) {
            out.push_back({std::string(1, c), i + 1});
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#' &&
               punct.find(line[i]) == std::string_view::npos)
            ++i;
        out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return out;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

/// Parses a nonnegative decimal integer token.
inline Coeff parse_count(const Token& t, std::size_t line) {
    if (t.text.empty()) throw SyntaxError(line, t.column, "expected an integer");
    Coeff v = 0;
    for (char ch : t.text) {
        if (ch < '0' || ch > '9') throw SyntaxError(line, t.column, "expected an integer, got '" + t.text + "'");
        try {
            v = checked_add(checked_mul(v, 10), ch - '0');
        } catch (const OverflowDetected&) {
            throw SyntaxError(line, t.column, "integer out of range");
        }
    }
    return v;
}

} // namespace fusionring::detail
