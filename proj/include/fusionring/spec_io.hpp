#pragma once

/// Ring spec text format.
///
///   ring <name>
///   partial <true|false>
///   truncation <odd integer>
///   basis <label> <degree> <dual-label>
///   unit <label>
///   prod <a> <b> : <label> <mult> [, <label> <mult>]*
///
/// Products with the unit may be omitted. Other omitted products are
/// Unknown in a partial ring and an error otherwise.

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "fusionring/ring.hpp"
#include "fusionring/text.hpp"

namespace fusionring {

inline FusionRing parse_spec(std::string_view text) {
    FusionRingBuilder b;
    bool have_ring = false, have_partial = false, have_unit = false;
    std::optional<Coeff> truncation;
    std::map<std::pair<std::string, std::string>, std::size_t> prod_lines;

    auto lines = detail::split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const std::size_t lineno = ln + 1;
        auto tok = detail::tokenize(lines[ln], ":,");
        if (tok.empty()) continue;
        const std::string& kw = tok[0].text;
        auto need = [&](std::size_t n) {
            if (tok.size() < n)
                throw SyntaxError(lineno, lines[ln].size() + 1, "'" + kw + "' expects " + std::to_string(n - 1) + " arguments");
            if (tok.size() > n) throw SyntaxError(lineno, tok[n].column, "unexpected token '" + tok[n].text + "'");
        };
        auto label_at = [&](std::size_t k) -> const std::string& {
            if (!is_valid_label(tok[k].text)) throw SyntaxError(lineno, tok[k].column, "invalid label '" + tok[k].text + "'");
            return tok[k].text;
        };

        if (kw == "ring") {
            need(2);
            if (have_ring) throw SyntaxError(lineno, tok[0].column, "repeated 'ring' line");
            b.name(tok[1].text);
            have_ring = true;
        } else if (kw == "partial") {
            need(2);
            if (have_partial) throw SyntaxError(lineno, tok[0].column, "repeated 'partial' line");
            if (tok[1].text != "true" && tok[1].text != "false")
                throw SyntaxError(lineno, tok[1].column, "expected true or false");
            b.partial(tok[1].text == "true");
            have_partial = true;
        } else if (kw == "truncation") {
            need(2);
            if (truncation) throw SyntaxError(lineno, tok[0].column, "repeated 'truncation' line");
            truncation = detail::parse_count(tok[1], lineno);
            if (*truncation % 2 == 0) throw SyntaxError(lineno, tok[1].column, "truncation bound must be odd");
        } else if (kw == "basis") {
            need(4);
            b.basis(label_at(1), detail::parse_count(tok[2], lineno), label_at(3));
        } else if (kw == "unit") {
            need(2);
            if (have_unit) throw SyntaxError(lineno, tok[0].column, "repeated 'unit' line");
            b.unit(label_at(1));
            have_unit = true;
        } else if (kw == "prod") {
            if (tok.size() < 4) throw SyntaxError(lineno, lines[ln].size() + 1, "'prod' expects '<a> <b> :'");
            const std::string& a = label_at(1);
            const std::string& c = label_at(2);
            if (tok[3].text != ":") throw SyntaxError(lineno, tok[3].column, "expected ':'");
            FusionRingBuilder::Terms terms;
            std::size_t k = 4;
            while (k < tok.size()) {
                if (k + 1 >= tok.size()) throw SyntaxError(lineno, lines[ln].size() + 1, "expected '<label> <mult>'");
                terms.emplace_back(label_at(k), detail::parse_count(tok[k + 1], lineno));
                k += 2;
                if (k < tok.size()) {
                    if (tok[k].text != ",") throw SyntaxError(lineno, tok[k].column, "expected ','");
                    ++k;
                    if (k == tok.size()) throw SyntaxError(lineno, lines[ln].size() + 1, "trailing ','");
                }
            }
            auto [it, fresh] = prod_lines.emplace(std::pair{a, c}, lineno);
            if (!fresh)
                throw SemanticError("line " + std::to_string(lineno) + ": duplicate product " + a + " " + c +
                                    " (first on line " + std::to_string(it->second) + ")");
            b.product(a, c, std::move(terms));
        } else {
            throw SyntaxError(lineno, tok[0].column, "unknown directive '" + kw + "'");
        }
    }
    if (!have_ring) throw SemanticError("missing 'ring' line");
    b.truncation(truncation);
    FusionRing r = b.build();
    if (auto bad = r.degree_sum_mismatch()) {
        const auto [x, y] = *bad;
        throw SemanticError("degree sum of " + r.label(x) + " " + r.label(y) + " is not " +
                            std::to_string(r.degree(x)) + "*" + std::to_string(r.degree(y)));
    }
    return r;
}

inline std::string write_spec(const FusionRing& r) {
    std::ostringstream out;
    out << "ring " << r.name() << '\n';
    out << "partial " << (r.is_partial() ? "true" : "false") << '\n';
    if (r.truncation()) out << "truncation " << *r.truncation() << '\n';
    for (const auto& e : r.basis()) out << "basis " << e.label << ' ' << e.degree << ' ' << e.dual_label << '\n';
    out << "unit " << r.label(r.unit()) << '\n';
    for (Index a = 0; a < r.rank(); ++a)
        for (Index c = 0; c < r.rank(); ++c) {
            const auto& p = r.product(a, c);
            if (!p) continue;
            if ((a == r.unit() || c == r.unit()) && *p == RingElement::basic(a == r.unit() ? c : a)) continue;
            out << "prod " << r.label(a) << ' ' << r.label(c) << " :";
            bool first = true;
            for (const auto& [i, m] : p->terms()) {
                out << (first ? " " : ", ") << r.label(i) << ' ' << m;
                first = false;
            }
            out << '\n';
        }
    return out.str();
}

} // namespace fusionring
