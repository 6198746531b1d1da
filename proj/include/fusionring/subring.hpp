#pragma once

/// Standard subrings, grouplike groups and the dimension-divisibility
/// realizability obstruction.
///
/// A standard subring is spanned by a subset of the basis. Dual-closed ones
/// correspond to Hopf subalgebras whose dimension is the sum of squared
/// degrees of the members; if a Hopf algebra exists, each such dimension must
/// divide that of every larger one.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "fusionring/ring.hpp"

namespace fusionring {

struct StandardSubring {
    std::vector<Index> members; // canonical order
    Coeff hopf_dimension = 0;
    bool closed_under_dual = false;

    bool contains(Index i) const { return std::binary_search(members.begin(), members.end(), i); }
    bool is_subset_of(const StandardSubring& o) const {
        return std::includes(o.members.begin(), o.members.end(), members.begin(), members.end());
    }
    friend bool operator==(const StandardSubring&, const StandardSubring&) = default;
};

/// Closure would need the Unknown product left*right.
struct Incomplete {
    Index left = 0;
    Index right = 0;
};

using ClosureResult = std::variant<StandardSubring, Incomplete>;

inline std::vector<std::string> member_labels(const FusionRing& r, const StandardSubring& s) {
    std::vector<std::string> out;
    for (Index i : s.members) out.push_back(r.label(i));
    return out;
}

inline StandardSubring make_subring(const FusionRing& r, const std::set<Index>& members) {
    StandardSubring s;
    s.members.assign(members.begin(), members.end());
    for (Index i : s.members) s.hopf_dimension = checked_add(s.hopf_dimension, checked_mul(r.degree(i), r.degree(i)));
    s.closed_under_dual = std::all_of(members.begin(), members.end(),
                                      [&](Index i) { return members.count(r.dual_index(i)) > 0; });
    return s;
}

namespace detail {

/// Smallest set containing gens and the unit that is closed under right
/// multiplication by the generators and under every Known product between
/// its members. Right-closure under generators spans all monomials, so by
/// associativity the result is closed under all products.
inline std::variant<std::set<Index>, Incomplete> closure_by_generators(const FusionRing& r,
                                                                      const std::set<Index>& gens) {
    std::set<Index> s = gens;
    s.insert(r.unit());
    bool changed = true;
    while (changed) {
        changed = false;
        const std::vector<Index> current(s.begin(), s.end());
        for (Index a : current)
            for (Index g : gens) {
                const auto& p = r.product(a, g);
                if (!p) return Incomplete{a, g};
                for (const auto& [c, n] : p->terms()) changed |= s.insert(c).second;
            }
        for (Index a : current)
            for (Index b : current) {
                const auto& p = r.product(a, b);
                if (!p) continue;
                for (const auto& [c, n] : p->terms()) changed |= s.insert(c).second;
            }
    }
    return s;
}

} // namespace detail

/// Closure of a set of basis indices. When the direct closure hits an
/// Unknown product, smaller generating subsets are tried: a subset whose
/// closure is complete and contains every generator generates the same
/// subring.
inline ClosureResult closure(const FusionRing& r, const std::set<Index>& seed, bool dual_closed = true) {
    std::set<Index> gens = seed;
    if (dual_closed)
        for (Index i : seed) gens.insert(r.dual_index(i));
    gens.erase(r.unit());

    auto direct = detail::closure_by_generators(r, gens);
    if (auto* s = std::get_if<std::set<Index>>(&direct)) return make_subring(r, *s);
    const Incomplete first_gap = std::get<Incomplete>(direct);
    if (gens.size() < 2) return first_gap;

    const std::vector<Index> g(gens.begin(), gens.end());
    const std::size_t n = g.size();
    const std::size_t max_size = n <= 12 ? n - 1 : std::min<std::size_t>(2, n - 1);
    for (std::size_t k = 1; k <= max_size; ++k) {
        // lexicographic k-subsets of g
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            std::set<Index> sub;
            for (std::size_t i : pick) sub.insert(g[i]);
            bool dual_ok = !dual_closed || std::all_of(sub.begin(), sub.end(),
                                                        [&](Index i) { return sub.count(r.dual_index(i)) > 0; });
            if (dual_ok) {
                auto res = detail::closure_by_generators(r, sub);
                if (auto* s = std::get_if<std::set<Index>>(&res)) {
                    if (std::includes(s->begin(), s->end(), gens.begin(), gens.end())) return make_subring(r, *s);
                }
            }
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return first_gap;
}

inline ClosureResult closure(const FusionRing& r, const std::vector<std::string>& seed, bool dual_closed = true) {
    std::set<Index> ix;
    for (const auto& s : seed) ix.insert(r.index_of(s));
    return closure(r, ix, dual_closed);
}

struct SubringEnumerationOptions {
    std::size_t max_rank = 20;
    /// Close every subset of the basis (rank <= 12 only); used as a
    /// brute-force cross-check of the default join search.
    bool power_set = false;
    /// Allow partial rings, omitting seeds whose closure is Incomplete.
    bool allow_incomplete = false;
};

inline bool subring_order(const StandardSubring& a, const StandardSubring& b) {
    return std::tie(a.hopf_dimension, a.members) < std::tie(b.hopf_dimension, b.members);
}

/// All dual-closed standard subrings, sorted by dimension then members.
///
/// Seeds are the unit, each single basis element and each pair; joins of
/// found subrings are then closed until no new subring appears. Every
/// standard subring is the join of the subrings generated by its members,
/// so the search is exhaustive on complete rings.
inline std::vector<StandardSubring> enumerate_standard_subrings(const FusionRing& r,
                                                                const SubringEnumerationOptions& opt = {}) {
    if (r.rank() > opt.max_rank) throw RankTooLarge(r.rank(), opt.max_rank);
    if (!r.is_complete() && !opt.allow_incomplete)
        throw PreconditionUnmet("ring '" + r.name() + "' has Unknown products; subring enumeration needs a complete ring");

    std::set<std::vector<Index>> seen;
    std::vector<StandardSubring> found;
    auto consider = [&](const std::set<Index>& seed) {
        auto res = closure(r, seed, true);
        if (auto* s = std::get_if<StandardSubring>(&res)) {
            if (seen.insert(s->members).second) found.push_back(*s);
        }
    };

    if (opt.power_set) {
        constexpr std::size_t kPowerSetBound = 12;
        if (r.rank() > kPowerSetBound) throw RankTooLarge(r.rank(), kPowerSetBound);
        for (std::size_t mask = 0; mask < (std::size_t{1} << r.rank()); ++mask) {
            std::set<Index> seed;
            for (Index i = 0; i < r.rank(); ++i)
                if (mask & (std::size_t{1} << i)) seed.insert(i);
            consider(seed);
        }
    } else {
        consider({r.unit()});
        for (Index x = 0; x < r.rank(); ++x) consider({x});
        for (Index x = 0; x < r.rank(); ++x)
            for (Index y = x + 1; y < r.rank(); ++y) consider({x, y});
        for (std::size_t i = 0; i < found.size(); ++i)
            for (std::size_t j = 0; j < i; ++j) {
                const StandardSubring a = found[i];
                const StandardSubring b = found[j];
                if (a.is_subset_of(b) || b.is_subset_of(a)) continue;
                std::set<Index> u(a.members.begin(), a.members.end());
                u.insert(b.members.begin(), b.members.end());
                consider(u);
            }
    }
    std::sort(found.begin(), found.end(), subring_order);
    return found;
}

struct FreenessViolation {
    StandardSubring inner;
    StandardSubring outer;
};

/// Nested pairs inner ⊊ outer of dual-closed subrings whose dimensions do
/// not divide. A necessary condition for realizability by a Hopf algebra.
inline std::vector<FreenessViolation> freeness_obstructions(const FusionRing& r,
                                                            std::vector<StandardSubring> subrings) {
    std::erase_if(subrings, [](const StandardSubring& s) { return !s.closed_under_dual; });
    if (r.is_complete()) {
        std::set<Index> all;
        for (Index i = 0; i < r.rank(); ++i) all.insert(i);
        auto whole = make_subring(r, all);
        if (std::find(subrings.begin(), subrings.end(), whole) == subrings.end()) subrings.push_back(whole);
    }
    std::sort(subrings.begin(), subrings.end(), subring_order);
    subrings.erase(std::unique(subrings.begin(), subrings.end()), subrings.end());

    std::vector<FreenessViolation> out;
    for (const auto& inner : subrings)
        for (const auto& outer : subrings) {
            if (inner == outer || !inner.is_subset_of(outer)) continue;
            if (outer.hopf_dimension % inner.hopf_dimension != 0) out.push_back({inner, outer});
        }
    return out;
}

inline std::vector<FreenessViolation> freeness_obstructions(const FusionRing& r) {
    SubringEnumerationOptions opt;
    opt.allow_incomplete = !r.is_complete();
    return freeness_obstructions(r, enumerate_standard_subrings(r, opt));
}

struct GrouplikeGroup {
    std::vector<Index> elements;                 // ring indices, canonical order
    std::vector<std::vector<std::size_t>> table; // positions into elements
    std::vector<std::size_t> orders;

    std::size_t size() const noexcept { return elements.size(); }
    std::optional<std::size_t> position(Index g) const {
        auto it = std::find(elements.begin(), elements.end(), g);
        if (it == elements.end()) return std::nullopt;
        return static_cast<std::size_t>(it - elements.begin());
    }
    std::size_t order_of(Index g) const { return orders.at(position(g).value()); }
};

/// Multiplication table and orders of a set of grouplikes that must be
/// closed under product.
inline GrouplikeGroup make_grouplike_group(const FusionRing& r, std::vector<Index> elements) {
    GrouplikeGroup grp;
    std::sort(elements.begin(), elements.end());
    grp.elements = std::move(elements);
    const std::size_t n = grp.size();
    grp.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Index a = grp.elements[i], b = grp.elements[j];
            const auto& p = r.product(a, b);
            if (!p) throw UnknownProduct(r.label(a), r.label(b));
            auto c = p->as_basic();
            auto pos = c ? grp.position(*c) : std::nullopt;
            if (!pos)
                throw NotClosed("grouplikes not closed: " + r.label(a) + "*" + r.label(b) + " = " + to_string(r, *p));
            grp.table[i][j] = *pos;
        }
    auto unit_pos = grp.position(r.unit());
    if (!unit_pos) throw NotClosed("grouplike set does not contain the unit");
    grp.orders.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t k = 1, cur = i;
        while (cur != *unit_pos) {
            cur = grp.table[cur][i];
            if (++k > n) throw NotClosed("grouplike " + r.label(grp.elements[i]) + " has no finite order");
        }
        grp.orders[i] = k;
    }
    return grp;
}

inline GrouplikeGroup grouplike_group(const FusionRing& r) { return make_grouplike_group(r, r.grouplikes()); }

/// {g grouplike : gx = x}, whose order must not exceed |x|^2.
inline GrouplikeGroup stabilizer_group(const FusionRing& r, const std::string& label) {
    const Index x = r.index_of(label);
    std::vector<Index> stab;
    for (Index g : r.grouplikes()) {
        const auto& p = r.product(g, x);
        if (!p) throw UnknownProduct(r.label(g), label);
        if (*p == RingElement::basic(x)) stab.push_back(g);
    }
    auto grp = make_grouplike_group(r, std::move(stab));
    if (static_cast<Coeff>(grp.size()) > checked_mul(r.degree(x), r.degree(x)))
        throw NotClosed("stabilizer of " + label + " has order " + std::to_string(grp.size()) + " > |x|^2");
    return grp;
}

/// The fusion ring spanned by a standard subring.
inline FusionRing restrict_to(const FusionRing& r, const StandardSubring& s) {
    FusionRingBuilder b(r.name() + "|sub");
    b.partial(r.is_partial()).truncation(r.truncation()).unit(r.label(r.unit()));
    for (Index i : s.members) {
        if (!s.contains(r.dual_index(i))) throw NotClosed("subring is not closed under duals");
        b.basis(r.label(i), r.degree(i), r.label(r.dual_index(i)));
    }
    for (Index x : s.members)
        for (Index y : s.members) {
            const auto& p = r.product(x, y);
            if (!p) continue;
            FusionRingBuilder::Terms terms;
            for (const auto& [c, n] : p->terms()) {
                if (!s.contains(c)) throw NotClosed("product leaves the subring");
                terms.emplace_back(r.label(c), n);
            }
            b.product(r.label(x), r.label(y), std::move(terms));
        }
    return b.build();
}

} // namespace fusionring
