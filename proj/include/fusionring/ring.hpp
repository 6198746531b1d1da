#pragma once

/// Fusion rings and their elements.
///
/// A FusionRing is a free abelian group on a finite basis of labelled simple
/// objects, each carrying a positive degree and a dual, with nonnegative
/// integer structure constants. Partial (truncated) rings mark individual
/// basic products as Unknown; any arithmetic touching an Unknown product
/// yields Unknown rather than a guess.
///
/// The basis is stored in canonical order: ascending (degree, label). Basis
/// indices are positions in that order, so iterating indices is iterating in
/// canonical order.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fusionring/checked.hpp"
#include "fusionring/error.hpp"

namespace fusionring {

using Index = std::size_t;

/// Sparse integer vector over the basis of a ring.
class RingElement {
public:
    using Terms = std::map<Index, Coeff>;

    RingElement() = default;

    static RingElement basic(Index i, Coeff c = 1) {
        RingElement e;
        e.add(i, c);
        return e;
    }

    Coeff operator[](Index i) const {
        auto it = terms_.find(i);
        return it == terms_.end() ? 0 : it->second;
    }

    /// Adds c to the coefficient at i; zero coefficients are not stored.
    void add(Index i, Coeff c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(i, c);
        if (!inserted) {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t support_size() const noexcept { return terms_.size(); }

    /// Index of the single basic element this equals, if it is basic.
    std::optional<Index> as_basic() const {
        if (terms_.size() == 1 && terms_.begin()->second == 1) return terms_.begin()->first;
        return std::nullopt;
    }

    /// Sum of coefficients (number of basic components with multiplicity).
    Coeff length() const {
        Coeff s = 0;
        for (const auto& [i, c] : terms_) s = checked_add(s, c);
        return s;
    }

    RingElement& operator+=(const RingElement& o) {
        for (const auto& [i, c] : o.terms_) add(i, c);
        return *this;
    }
    RingElement& operator-=(const RingElement& o) {
        for (const auto& [i, c] : o.terms_) add(i, checked_sub(0, c));
        return *this;
    }
    RingElement& operator*=(Coeff k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [i, c] : terms_) c = checked_mul(c, k);
        return *this;
    }

    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(Coeff k, RingElement a) { return a *= k; }
    friend bool operator==(const RingElement&, const RingElement&) = default;

private:
    Terms terms_;
};

/// True iff every coefficient is nonnegative (the element models a comodule).
inline bool is_nonnegative(const RingElement& z) {
    return std::all_of(z.terms().begin(), z.terms().end(), [](const auto& t) { return t.second >= 0; });
}

/// Componentwise a <= b.
inline bool is_dominated_by(const RingElement& a, const RingElement& b) {
    return is_nonnegative(b - a);
}

struct BasisElement {
    std::string label;
    Coeff degree = 1;
    std::string dual_label;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

inline bool is_valid_label(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char ch) {
        return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_';
    });
}

class FusionRingBuilder;

class FusionRing {
public:
    using Product = std::optional<RingElement>;

    const std::string& name() const noexcept { return name_; }
    std::size_t rank() const noexcept { return basis_.size(); }
    const std::vector<BasisElement>& basis() const noexcept { return basis_; }
    const BasisElement& element(Index i) const { return basis_.at(i); }
    const std::string& label(Index i) const { return basis_.at(i).label; }
    Coeff degree(Index i) const { return basis_.at(i).degree; }
    Index dual_index(Index i) const { return dual_.at(i); }
    Index unit() const noexcept { return unit_; }
    bool is_partial() const noexcept { return partial_; }
    std::optional<Coeff> truncation() const noexcept { return truncation_; }

    std::optional<Index> find(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    Index index_of(const std::string& label) const {
        auto i = find(label);
        if (!i) throw UnknownLabel(label);
        return *i;
    }

    /// Product of two basic elements, or nullopt when Unknown.
    const Product& product(Index a, Index b) const { return table_.at(a * rank() + b); }

    bool is_complete() const {
        return std::all_of(table_.begin(), table_.end(), [](const Product& p) { return p.has_value(); });
    }

    /// Basis indices with the given degree, in canonical order.
    std::vector<Index> of_degree(Coeff d) const {
        std::vector<Index> out;
        for (Index i = 0; i < rank(); ++i)
            if (basis_[i].degree == d) out.push_back(i);
        return out;
    }

    std::vector<Index> grouplikes() const { return of_degree(1); }

    bool has_even_degree() const {
        return std::any_of(basis_.begin(), basis_.end(), [](const BasisElement& b) { return b.degree % 2 == 0; });
    }

    /// Sum of squared degrees over the basis.
    Coeff dimension() const {
        Coeff s = 0;
        for (const auto& b : basis_) s = checked_add(s, checked_mul(b.degree, b.degree));
        return s;
    }

    /// Copy with the product a*b replaced; used to build corrupted or
    /// modified fixtures without re-running builder validation.
    FusionRing with_product(Index a, Index b, Product p) const {
        FusionRing r = *this;
        r.table_.at(a * rank() + b) = std::move(p);
        return r;
    }

    FusionRing with_name(std::string n) const {
        FusionRing r = *this;
        r.name_ = std::move(n);
        return r;
    }

    /// First fully Known product whose degree differs from deg(a)deg(b).
    std::optional<std::pair<Index, Index>> degree_sum_mismatch() const {
        for (Index a = 0; a < rank(); ++a)
            for (Index b = 0; b < rank(); ++b) {
                const auto& p = product(a, b);
                if (!p) continue;
                Coeff d = 0;
                for (const auto& [c, n] : p->terms()) d = checked_add(d, checked_mul(n, degree(c)));
                if (d != checked_mul(degree(a), degree(b))) return std::pair{a, b};
            }
        return std::nullopt;
    }

    friend bool operator==(const FusionRing& x, const FusionRing& y) {
        return x.name_ == y.name_ && x.basis_ == y.basis_ && x.unit_ == y.unit_ && x.partial_ == y.partial_ &&
               x.truncation_ == y.truncation_ && x.table_ == y.table_;
    }

private:
    friend class FusionRingBuilder;
    FusionRing() = default;

    std::string name_;
    std::vector<BasisElement> basis_;
    std::vector<Index> dual_;
    std::map<std::string, Index> index_;
    Index unit_ = 0;
    bool partial_ = false;
    std::optional<Coeff> truncation_;
    std::vector<Product> table_;
};

/// Collects basis, unit and products by label, then validates and sorts
/// them into a FusionRing.
class FusionRingBuilder {
public:
    using Terms = std::vector<std::pair<std::string, Coeff>>;

    explicit FusionRingBuilder(std::string name = "unnamed") : name_(std::move(name)) {}

    FusionRingBuilder& name(std::string n) {
        name_ = std::move(n);
        return *this;
    }
    FusionRingBuilder& basis(std::string label, Coeff degree, std::string dual_label) {
        basis_.push_back({std::move(label), degree, std::move(dual_label)});
        return *this;
    }
    FusionRingBuilder& unit(std::string label) {
        unit_ = std::move(label);
        return *this;
    }
    FusionRingBuilder& partial(bool p) {
        partial_ = p;
        return *this;
    }
    FusionRingBuilder& truncation(std::optional<Coeff> t) {
        truncation_ = t;
        return *this;
    }
    FusionRingBuilder& product(const std::string& a, const std::string& b, Terms terms) {
        if (!products_.emplace(std::pair{a, b}, std::move(terms)).second)
            throw SemanticError("duplicate product " + a + " " + b);
        return *this;
    }
    bool has_product(const std::string& a, const std::string& b) const { return products_.count({a, b}) > 0; }

    FusionRing build() const {
        FusionRing r;
        r.name_ = name_;
        r.partial_ = partial_;
        r.truncation_ = truncation_;
        if (basis_.empty()) throw SemanticError("ring has no basis elements");

        std::set<std::string> seen;
        for (const auto& b : basis_) {
            if (!is_valid_label(b.label)) throw SemanticError("invalid label '" + b.label + "'");
            if (!seen.insert(b.label).second) throw SemanticError("duplicate basis label '" + b.label + "'");
            if (b.degree < 1) throw SemanticError("degree of '" + b.label + "' must be at least 1");
            if (truncation_ && b.degree > *truncation_)
                throw SemanticError("degree of '" + b.label + "' exceeds the truncation bound");
        }
        if (truncation_ && *truncation_ < 1) throw SemanticError("truncation bound must be positive");

        r.basis_ = basis_;
        std::sort(r.basis_.begin(), r.basis_.end(), [](const BasisElement& x, const BasisElement& y) {
            return std::tie(x.degree, x.label) < std::tie(y.degree, y.label);
        });
        for (Index i = 0; i < r.basis_.size(); ++i) r.index_[r.basis_[i].label] = i;

        r.dual_.resize(r.rank());
        for (Index i = 0; i < r.rank(); ++i) {
            const auto& b = r.basis_[i];
            auto it = r.index_.find(b.dual_label);
            if (it == r.index_.end())
                throw SemanticError("dangling dual label '" + b.dual_label + "' for '" + b.label + "'");
            r.dual_[i] = it->second;
        }
        for (Index i = 0; i < r.rank(); ++i) {
            if (r.dual_[r.dual_[i]] != i)
                throw SemanticError("dual of '" + r.basis_[i].label + "' is not an involution");
            if (r.basis_[r.dual_[i]].degree != r.basis_[i].degree)
                throw SemanticError("dual of '" + r.basis_[i].label + "' has a different degree");
        }

        if (!unit_) throw SemanticError("no unit declared");
        auto u = r.index_.find(*unit_);
        if (u == r.index_.end()) throw SemanticError("unit '" + *unit_ + "' is not a basis label");
        r.unit_ = u->second;
        if (r.basis_[r.unit_].degree != 1) throw SemanticError("unit must have degree 1");
        if (r.dual_[r.unit_] != r.unit_) throw SemanticError("unit must be self-dual");

        const std::size_t n = r.rank();
        r.table_.assign(n * n, std::nullopt);
        for (const auto& [key, terms] : products_) {
            Index a = lookup(r, key.first);
            Index b = lookup(r, key.second);
            RingElement e;
            std::set<Index> targets;
            for (const auto& [lab, m] : terms) {
                Index c = lookup(r, lab);
                if (m <= 0) throw SemanticError("multiplicity of '" + lab + "' must be positive");
                if (!targets.insert(c).second)
                    throw SemanticError("label '" + lab + "' repeated in product " + key.first + " " + key.second);
                e.add(c, m);
            }
            r.table_[a * n + b] = std::move(e);
        }
        for (Index x = 0; x < n; ++x) {
            if (!r.table_[r.unit_ * n + x]) r.table_[r.unit_ * n + x] = RingElement::basic(x);
            if (!r.table_[x * n + r.unit_]) r.table_[x * n + r.unit_] = RingElement::basic(x);
        }
        if (!partial_) {
            for (Index a = 0; a < n; ++a)
                for (Index b = 0; b < n; ++b)
                    if (!r.table_[a * n + b])
                        throw SemanticError("missing product " + r.basis_[a].label + " " + r.basis_[b].label +
                                            " in a complete ring");
        }
        return r;
    }

private:
    static Index lookup(const FusionRing& r, const std::string& label) {
        auto it = r.index_.find(label);
        if (it == r.index_.end()) throw SemanticError("unknown label '" + label + "' in product");
        return it->second;
    }

    std::string name_;
    std::vector<BasisElement> basis_;
    std::optional<std::string> unit_;
    bool partial_ = false;
    std::optional<Coeff> truncation_;
    std::map<std::pair<std::string, std::string>, Terms> products_;
};

// ---------------------------------------------------------------------------
// Element operations

inline RingElement element_from_basis(const FusionRing& ring, const std::string& label) {
    return RingElement::basic(ring.index_of(label));
}

/// Bilinear extension of the structure constants; nullopt if any
/// contributing basic product is Unknown.
inline std::optional<RingElement> multiply(const FusionRing& ring, const RingElement& a, const RingElement& b) {
    RingElement out;
    for (const auto& [i, ca] : a.terms()) {
        for (const auto& [j, cb] : b.terms()) {
            const auto& p = ring.product(i, j);
            if (!p) return std::nullopt;
            Coeff k = checked_mul(ca, cb);
            for (const auto& [c, n] : p->terms()) out.add(c, checked_mul(k, n));
        }
    }
    return out;
}

inline std::optional<RingElement> multiply(const FusionRing& ring, Index a, Index b) {
    return ring.product(a, b);
}

/// m(w, z) = sum over the basis of w_x * z_x.
inline Coeff multiplicity(const RingElement& w, const RingElement& z) {
    Coeff s = 0;
    for (const auto& [i, c] : w.terms()) s = checked_add(s, checked_mul(c, z[i]));
    return s;
}

inline RingElement dual(const FusionRing& ring, const RingElement& z) {
    RingElement out;
    for (const auto& [i, c] : z.terms()) out.add(ring.dual_index(i), c);
    return out;
}

inline Coeff degree(const FusionRing& ring, const RingElement& z) {
    Coeff s = 0;
    for (const auto& [i, c] : z.terms()) s = checked_add(s, checked_mul(c, ring.degree(i)));
    return s;
}

using Decomposition = std::vector<std::pair<std::string, Coeff>>;

inline Decomposition decompose(const FusionRing& ring, const RingElement& z) {
    Decomposition out;
    for (const auto& [i, c] : z.terms()) out.emplace_back(ring.label(i), c);
    return out;
}

inline RingElement element_from_terms(const FusionRing& ring, const Decomposition& terms) {
    RingElement e;
    for (const auto& [lab, c] : terms) e.add(ring.index_of(lab), c);
    return e;
}

/// Human-readable form such as "1 + x3 + 2*x5".
inline std::string to_string(const FusionRing& ring, const RingElement& z) {
    if (z.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : z.terms()) {
        Coeff mag = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (mag != 1) os << mag << "*";
        os << ring.label(i);
        first = false;
    }
    return os.str();
}

inline std::string to_string(const FusionRing& ring, const std::optional<RingElement>& z) {
    return z ? to_string(ring, *z) : std::string("Unknown");
}

} // namespace fusionring
