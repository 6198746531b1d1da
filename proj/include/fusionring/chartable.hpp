#pragma once

/// Character tables with cyclotomic values, and the fusion ring they define.
///
/// Structure constants are inner products
///   N[i][j][k] = (1/|G|) sum_classes size * chi_i chi_j conj(chi_k),
/// accumulated exactly in Z[zeta_N]; the total must reduce to an integer
/// divisible by |G|.
///
/// File format (one directive per line, '#' comments):
///   group <name> <order>
///   conductor <N>
///   class <size>                   first class is the identity
///   char <degree> <value>...       one value per class, polynomials in z
///   dualpair <i> <j>               0-based character indices; others self-dual
///   label <i> <name>               optional ring label, default chi<i>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fusionring/cyclotomic.hpp"
#include "fusionring/ring.hpp"
#include "fusionring/text.hpp"

namespace fusionring {

struct Character {
    Coeff degree = 1;
    std::vector<Cyclotomic> values;
    std::string label;
};

struct CharacterTable {
    std::string name;
    Coeff group_order = 1;
    std::size_t conductor = 1;
    std::vector<Coeff> class_sizes;
    std::vector<Character> characters;
    std::vector<std::size_t> conjugate; // character -> dual character
};

/// sum_classes size * a * conj(b), before division by |G|.
inline Cyclotomic class_weighted_sum(const CharacterTable& t, const std::vector<Cyclotomic>& a,
                                     const std::vector<Cyclotomic>& b) {
    Cyclotomic s(t.conductor);
    for (std::size_t c = 0; c < t.class_sizes.size(); ++c) s += (a[c] * b[c].conj()).scaled(t.class_sizes[c]);
    return s;
}

/// Checks class sizes, degrees, conjugates and row orthogonality.
inline void validate(const CharacterTable& t) {
    Coeff total = 0;
    for (Coeff s : t.class_sizes) {
        if (s < 1) throw SemanticError("class sizes must be positive");
        total = checked_add(total, s);
    }
    if (total != t.group_order)
        throw SemanticError("class sizes sum to " + std::to_string(total) + ", group order is " + std::to_string(t.group_order));
    if (t.class_sizes.empty() || t.class_sizes[0] != 1) throw SemanticError("first class must be the identity (size 1)");
    if (t.conjugate.size() != t.characters.size()) throw SemanticError("conjugate map has the wrong size");
    for (std::size_t i = 0; i < t.characters.size(); ++i) {
        const auto& ch = t.characters[i];
        if (ch.values.size() != t.class_sizes.size())
            throw SemanticError("character " + std::to_string(i) + " has " + std::to_string(ch.values.size()) +
                                " values for " + std::to_string(t.class_sizes.size()) + " classes");
        if (ch.values[0].as_integer() != ch.degree)
            throw SemanticError("character " + std::to_string(i) + " value at the identity differs from its degree");
        const std::size_t j = t.conjugate[i];
        if (j >= t.characters.size() || t.conjugate[j] != i)
            throw SemanticError("dual pairing of character " + std::to_string(i) + " is not an involution");
        for (std::size_t c = 0; c < t.class_sizes.size(); ++c)
            if (!(ch.values[c].conj() == t.characters[j].values[c]))
                throw SemanticError("character " + std::to_string(j) + " is not the complex conjugate of character " +
                                    std::to_string(i));
    }
    for (std::size_t i = 0; i < t.characters.size(); ++i)
        for (std::size_t j = 0; j < t.characters.size(); ++j) {
            auto v = class_weighted_sum(t, t.characters[i].values, t.characters[j].values).as_integer();
            Coeff want = i == j ? t.group_order : 0;
            if (v != want)
                throw OrthogonalityFailure("<chi_" + std::to_string(i) + ", chi_" + std::to_string(j) + "> != " +
                                           (i == j ? "1" : "0"));
        }
}

inline CharacterTable parse_character_table(std::string_view text) {
    CharacterTable t;
    bool have_group = false;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    struct PendingChar {
        std::size_t line;
        std::vector<detail::Token> tokens;
    };
    std::vector<PendingChar> pending;
    std::vector<std::pair<std::size_t, std::string>> labels;

    auto lines = detail::split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const std::size_t lineno = ln + 1;
        auto tok = detail::tokenize(lines[ln]);
        if (tok.empty()) continue;
        const std::string& kw = tok[0].text;
        auto need = [&](std::size_t n) {
            if (tok.size() != n)
                throw SyntaxError(lineno, tok[0].column, "'" + kw + "' expects " + std::to_string(n - 1) + " arguments");
        };
        if (kw == "group") {
            need(3);
            t.name = tok[1].text;
            t.group_order = detail::parse_count(tok[2], lineno);
            have_group = true;
        } else if (kw == "conductor") {
            need(2);
            t.conductor = static_cast<std::size_t>(detail::parse_count(tok[1], lineno));
            if (t.conductor == 0) throw SyntaxError(lineno, tok[1].column, "conductor must be positive");
        } else if (kw == "class") {
            need(2);
            t.class_sizes.push_back(detail::parse_count(tok[1], lineno));
        } else if (kw == "char") {
            if (tok.size() < 3) throw SyntaxError(lineno, tok[0].column, "'char' expects a degree and values");
            pending.push_back({lineno, tok});
        } else if (kw == "dualpair") {
            need(3);
            pairs.emplace_back(detail::parse_count(tok[1], lineno), detail::parse_count(tok[2], lineno));
        } else if (kw == "label") {
            need(3);
            if (!is_valid_label(tok[2].text)) throw SyntaxError(lineno, tok[2].column, "invalid label");
            labels.emplace_back(detail::parse_count(tok[1], lineno), tok[2].text);
        } else {
            throw SyntaxError(lineno, tok[0].column, "unknown directive '" + kw + "'");
        }
    }
    if (!have_group) throw SemanticError("missing 'group' line");

    // Values are parsed once the conductor is known, wherever it appears.
    for (const auto& pc : pending) {
        Character ch;
        ch.degree = detail::parse_count(pc.tokens[1], pc.line);
        for (std::size_t k = 2; k < pc.tokens.size(); ++k) {
            std::size_t off = 0;
            auto v = parse_cyclotomic(pc.tokens[k].text, t.conductor, &off);
            if (!v) throw SyntaxError(pc.line, pc.tokens[k].column + off, "malformed value '" + pc.tokens[k].text + "'");
            ch.values.push_back(*v);
        }
        ch.label = "chi" + std::to_string(t.characters.size());
        t.characters.push_back(std::move(ch));
    }
    for (const auto& [i, name] : labels) {
        if (i >= t.characters.size()) throw SemanticError("label index " + std::to_string(i) + " out of range");
        t.characters[i].label = name;
    }
    t.conjugate.resize(t.characters.size());
    for (std::size_t i = 0; i < t.conjugate.size(); ++i) t.conjugate[i] = i;
    for (const auto& [i, j] : pairs) {
        if (i >= t.characters.size() || j >= t.characters.size())
            throw SemanticError("dualpair index out of range");
        t.conjugate[i] = j;
        t.conjugate[j] = i;
    }
    validate(t);
    return t;
}

/// The Grothendieck ring spanned by the irreducible characters.
inline FusionRing char_table_ring(const CharacterTable& t) {
    validate(t);
    const std::size_t k = t.characters.size();
    std::optional<std::size_t> trivial;
    for (std::size_t i = 0; i < k && !trivial; ++i) {
        bool all_one = true;
        for (const auto& v : t.characters[i].values) all_one = all_one && v.as_integer() == 1;
        if (all_one) trivial = i;
    }
    if (!trivial) throw SemanticError("character table has no trivial character");

    FusionRingBuilder b(t.name);
    for (std::size_t i = 0; i < k; ++i)
        b.basis(t.characters[i].label, t.characters[i].degree, t.characters[t.conjugate[i]].label);
    b.unit(t.characters[*trivial].label);

    const std::size_t classes = t.class_sizes.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<Cyclotomic> prod(classes);
            for (std::size_t c = 0; c < classes; ++c) prod[c] = t.characters[i].values[c] * t.characters[j].values[c];
            FusionRingBuilder::Terms terms;
            for (std::size_t m = 0; m < k; ++m) {
                auto total = class_weighted_sum(t, prod, t.characters[m].values).as_integer();
                if (!total || *total % t.group_order != 0 || *total < 0)
                    throw NotIntegral("<chi_" + std::to_string(i) + " chi_" + std::to_string(j) + ", chi_" +
                                      std::to_string(m) + "> is not a nonnegative integer");
                Coeff n = *total / t.group_order;
                if (n > 0) terms.emplace_back(t.characters[m].label, n);
            }
            b.product(t.characters[i].label, t.characters[j].label, std::move(terms));
        }
    return b.build();
}

} // namespace fusionring
