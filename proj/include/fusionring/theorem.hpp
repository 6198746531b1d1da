#pragma once

/// Decision procedures for fusion rings with a degree-3 simple object and no
/// even-degree simples.
///
/// Each procedure evaluates the case analysis on concrete data. Branches that
/// cannot occur in a ring realized by a Hopf algebra are not assumed away:
/// they are re-derived on the input and reported, so malformed or
/// non-realizable inputs surface as diagnostics instead of wrong answers.

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "fusionring/axioms.hpp"
#include "fusionring/ring.hpp"
#include "fusionring/subring.hpp"

namespace fusionring {

// ---------------------------------------------------------------------------
// Degree-3 case analysis

struct GrouplikeFound {
    Index grouplike = 0;
    std::size_t order = 0;
};

/// x3 x3* = 1 + u + v with |u| = 3, |v| = 5.
struct UV {
    Index u = 0;
    Index v = 0;
};

struct Obstruction {
    std::string description;
};

using Lemma32Result = std::variant<GrouplikeFound, UV, Obstruction>;

/// Order of a grouplike under the ring's Known products, nullopt if the
/// powers never return to the unit.
inline std::optional<std::size_t> grouplike_order(const FusionRing& r, Index g) {
    Index cur = g;
    for (std::size_t k = 1; k <= r.rank(); ++k) {
        if (cur == r.unit()) return k;
        const auto& p = r.product(cur, g);
        if (!p) throw UnknownProduct(r.label(cur), r.label(g));
        auto b = p->as_basic();
        if (!b || r.degree(*b) != 1) return std::nullopt;
        cur = *b;
    }
    return std::nullopt;
}

inline std::optional<Index> grouplike_power(const FusionRing& r, Index g, std::size_t e) {
    Index cur = r.unit();
    for (std::size_t i = 0; i < e; ++i) {
        const auto& p = r.product(cur, g);
        if (!p) throw UnknownProduct(r.label(cur), r.label(g));
        auto b = p->as_basic();
        if (!b) return std::nullopt;
        cur = *b;
    }
    return cur;
}

inline Lemma32Result lemma32_cases(const FusionRing& r, Index x3) {
    if (r.degree(x3) != 3) throw NotDegreeThree(r.label(x3));
    const Index xd = r.dual_index(x3);
    const auto& xx = r.product(x3, xd);
    if (!xx) throw UnknownProduct(r.label(x3), r.label(xd));

    if (degree(r, *xx) != 9)
        return Obstruction{"|x3 x3*| = " + std::to_string(degree(r, *xx)) + ", expected 9"};
    if ((*xx)[r.unit()] != 1)
        return Obstruction{"m(1, x3 x3*) = " + std::to_string((*xx)[r.unit()]) + ", expected 1"};

    const RingElement y = *xx - RingElement::basic(r.unit());
    Coeff count = 0;
    std::vector<Index> found;
    for (const auto& [i, c] : y.terms()) {
        if (r.degree(i) != 1) continue;
        count = checked_add(count, c);
        found.push_back(i);
        if (c > 1)
            return Obstruction{"grouplike " + r.label(i) + " has multiplicity " + std::to_string(c) +
                               " in x3 x3*, at most 1 is possible"};
    }

    // Counts 4 and 6 are diagnosed first: they are exactly the cases that
    // would need even-degree simples.
    if (count == 4 || count == 6)
        return Obstruction{std::to_string(count) + " grouplike components leave degree " + std::to_string(8 - count) +
                           ", impossible without even-degree simples"};
    if (r.has_even_degree()) return Obstruction{"ring has an even-degree basic element"};

    switch (count) {
    case 1:
    case 2:
    case 3:
    case 5:
    case 8: {
        for (Index g : found) {
            auto ord = grouplike_order(r, g);
            if (ord && (*ord == 2 || *ord == 3)) return GrouplikeFound{g, *ord};
        }
        for (Index g : found) {
            auto ord = grouplike_order(r, g);
            if (!ord) continue;
            for (std::size_t p : {std::size_t{2}, std::size_t{3}})
                if (*ord % p == 0)
                    if (auto h = grouplike_power(r, g, *ord / p)) return GrouplikeFound{*h, p};
        }
        return Obstruction{"grouplike components of x3 x3* contain no element of order 2 or 3"};
    }
    case 0: {
        auto it = y.terms().begin();
        if (y.support_size() == 2 && it->second == 1 && std::next(it)->second == 1) {
            Index u = it->first, v = std::next(it)->first;
            if (r.degree(u) == 3 && r.degree(v) == 5) return UV{u, v};
        }
        return Obstruction{"x3 x3* - 1 = " + to_string(r, y) + " is not u + v with |u| = 3, |v| = 5"};
    }
    default:
        return Obstruction{std::to_string(count) + " grouplike components in x3 x3* - 1 do not fit its degree 8"};
    }
}

inline Lemma32Result lemma32_cases(const FusionRing& r, const std::string& x3) {
    return lemma32_cases(r, r.index_of(x3));
}

// ---------------------------------------------------------------------------
// Self-dual chain

/// x3 self-dual with x3^2 = 1 + x3 + x5.
struct SelfDual {
    Index x3 = 0;
    Index x5 = 0;
    std::size_t chain_length = 0;
    std::vector<Index> chain;
};

struct ChainFailure {
    std::vector<Index> trace;
    std::string diagnosis;
};

using Lemma33Result = std::variant<GrouplikeFound, SelfDual, ChainFailure>;

/// Follows x3 -> u -> u1 -> ... where each step applies the case analysis
/// to the current degree-3 element, until the element reproduces itself.
inline Lemma33Result lemma33_selfdual_chain(const FusionRing& r, Index x3) {
    std::vector<Index> trace{x3};
    const std::size_t bound = r.of_degree(3).size();
    Index cur = x3;
    for (std::size_t step = 0;; ++step) {
        auto res = lemma32_cases(r, cur);
        if (auto* g = std::get_if<GrouplikeFound>(&res)) return *g;
        if (auto* o = std::get_if<Obstruction>(&res)) return ChainFailure{trace, o->description};
        const auto uv = std::get<UV>(res);
        if (r.dual_index(uv.u) != uv.u || r.dual_index(uv.v) != uv.v)
            return ChainFailure{trace, "components of " + r.label(cur) + " " + r.label(cur) +
                                           "* are not self-dual although the product is self-adjoint"};
        if (uv.u == cur) {
            const auto& sq = r.product(cur, cur);
            RingElement want = RingElement::basic(r.unit()) + RingElement::basic(cur) + RingElement::basic(uv.v);
            if (!sq || *sq != want)
                return ChainFailure{trace, r.label(cur) + "^2 differs from 1 + " + r.label(cur) + " + " + r.label(uv.v)};
            return SelfDual{cur, uv.v, step, trace};
        }
        if (std::find(trace.begin(), trace.end(), uv.u) != trace.end())
            return ChainFailure{trace, "chain revisits " + r.label(uv.u) + " without stabilizing"};
        if (step + 1 > bound) return ChainFailure{trace, "chain exceeds the number of degree-3 elements"};
        trace.push_back(uv.u);
        cur = uv.u;
    }
}

inline Lemma33Result lemma33_selfdual_chain(const FusionRing& r, const std::string& x3) {
    return lemma33_selfdual_chain(r, r.index_of(x3));
}

// ---------------------------------------------------------------------------
// Triple lemma

/// The unique decomposition prod = b + c + u = a' + c + v has v = b, u = a'.
struct TripleForced {
    RingElement c;
};

struct TripleViolation {
    RingElement c;
    RingElement u;
    RingElement v;
};

using TripleResult = std::variant<TripleForced, TripleViolation>;

/// Checks on concrete data that every decomposition
/// prod = b + c + u = a' + c + v with c != 0 and c, u, v nonnegative has
/// v = b and u = a'. prod is the product a * x3.
inline TripleResult validate_triple(const FusionRing& r, Index a, const RingElement& aprime, Index b,
                                    const RingElement& prod) {
    if (r.has_even_degree()) throw PreconditionUnmet("ring has even-degree basic elements");
    if (a == b) throw PreconditionUnmet("a and b coincide; need |a| < |b|");
    if (aprime.is_zero() || !is_nonnegative(aprime)) throw PreconditionUnmet("a' must be a nonzero nonnegative element");
    if (degree(r, aprime) != r.degree(a)) throw PreconditionUnmet("|a'| differs from |a|");
    if (!(r.degree(a) < r.degree(b))) throw PreconditionUnmet("need |a| < |b|");
    if (degree(r, prod) != checked_mul(3, r.degree(a))) throw PreconditionUnmet("prod does not have degree 3|a|");

    const RingElement minus_b = prod - RingElement::basic(b);
    const RingElement minus_ap = prod - aprime;
    if (!is_nonnegative(minus_b) || !is_nonnegative(minus_ap))
        throw PreconditionUnmet("prod has no decomposition containing both b and a'");

    std::vector<std::pair<Index, Coeff>> box;
    std::size_t cells = 1;
    for (const auto& [i, n] : minus_b.terms()) {
        Coeff m = std::min(n, minus_ap[i]);
        if (m <= 0) continue;
        box.emplace_back(i, m);
        cells *= static_cast<std::size_t>(m + 1);
        if (cells > 1'000'000) throw InvalidArgument("decomposition search space too large");
    }
    if (box.empty()) throw PreconditionUnmet("no decomposition with c != 0");

    // Odometer over 0 <= c <= box, skipping c = 0.
    std::vector<Coeff> digit(box.size(), 0);
    while (true) {
        std::size_t k = 0;
        while (k < box.size() && digit[k] == box[k].second) digit[k++] = 0;
        if (k == box.size()) break;
        ++digit[k];
        RingElement c;
        for (std::size_t i = 0; i < box.size(); ++i) c.add(box[i].first, digit[i]);
        RingElement u = minus_b - c;
        RingElement v = minus_ap - c;
        if (u != aprime || v != RingElement::basic(b)) return TripleViolation{c, u, v};
    }
    return TripleForced{prod - RingElement::basic(b) - aprime};
}

inline TripleResult validate_triple(const FusionRing& r, const std::string& a, const std::string& aprime,
                                    const std::string& b, const RingElement& prod) {
    return validate_triple(r, r.index_of(a), element_from_basis(r, aprime), r.index_of(b), prod);
}

// ---------------------------------------------------------------------------
// Ladder

/// x_{2n+1} x3 = x_{2n-1} + x'_{2n+1} + x_{2n+3}.
struct LadderRelation {
    std::size_t n = 0;
    RingElement product;
};

struct TruncationReached {
    std::size_t depth = 0;
    std::string reason;
};

enum class LadderBranch {
    /// x_{2n+3} = y_k x_{2k+3} with k < n.
    Eq3Impossible,
    /// z0 basic, forcing g^2 = 1: a grouplike of order 2.
    GrouplikeOrder2,
    /// k = n = 1: the forced standard subrings violate divisibility.
    TerminalFreeness,
    /// Data contradicts a step every genuine ring satisfies.
    Malformed,
};

inline const char* to_string(LadderBranch b) {
    switch (b) {
    case LadderBranch::Eq3Impossible: return "eq3_impossible";
    case LadderBranch::GrouplikeOrder2: return "grouplike_order_2";
    case LadderBranch::TerminalFreeness: return "terminal_freeness";
    case LadderBranch::Malformed: return "malformed";
    }
    return "?";
}

struct FailureBranch {
    LadderBranch branch = LadderBranch::Malformed;
    std::string diagnosis;
    std::vector<std::string> trace;
    std::optional<Index> grouplike;
    std::vector<StandardSubring> subrings;
    std::vector<FreenessViolation> violations;
};

struct LadderCertificate {
    Index x3 = 0;
    std::vector<Index> x_family;      // x_1 (unit), x_3, x_5, ...
    std::vector<Index> xprime_family; // x'_3, x'_5, ...
    std::size_t depth = 0;            // number of verified relations
    std::vector<LadderRelation> relations;
    std::vector<std::string> tie_breaks;
    std::variant<TruncationReached, FailureBranch> terminal;

    bool reached_truncation() const { return std::holds_alternative<TruncationReached>(terminal); }
};

namespace detail {

inline FailureBranch malformed(std::string why, std::vector<std::string> trace = {}) {
    FailureBranch f;
    f.branch = LadderBranch::Malformed;
    f.diagnosis = std::move(why);
    f.trace = std::move(trace);
    return f;
}

inline std::string xname(std::size_t n) { return "x_" + std::to_string(n); }

/// Smallest-degree component; ties are resolved by canonical order and
/// recorded.
inline Index smallest_component(const FusionRing& r, const RingElement& e, std::vector<std::string>& ties,
                                const std::string& what) {
    Index first = e.terms().begin()->first;
    std::vector<std::string> same;
    for (const auto& [i, c] : e.terms())
        if (r.degree(i) == r.degree(first)) same.push_back(r.label(i));
    if (same.size() > 1) {
        std::string s = what + ": picked " + r.label(first) + " among {";
        for (std::size_t i = 0; i < same.size(); ++i) s += (i ? ", " : "") + same[i];
        ties.push_back(s + "}");
    }
    return first;
}

/// Descending chain y_0, y_1, ... started when the smallest new component
/// y0 of x_{2n+3} x3 has degree below 2n+3. Reports which branch of the
/// impossibility argument the data falls into.
inline std::variant<TruncationReached, FailureBranch>
descending_chain(const FusionRing& r, const LadderCertificate& cert, std::size_t n, Index y0,
                 const RingElement& top_times_x3, std::vector<std::string>& ties) {
    const Index x3 = cert.x3;
    const Index top = cert.x_family[n + 1];
    const Index prev = cert.x_family[n];
    std::vector<std::string> trace;
    trace.push_back(xname(2 * n + 3) + " x3 = " + to_string(r, top_times_x3));
    auto unknown = [&](Index a, Index b) {
        return TruncationReached{cert.depth, "diagnosis at depth " + std::to_string(cert.depth) + " needs Unknown product " +
                                                 r.label(a) + "*" + r.label(b)};
    };

    const auto& y0x3 = r.product(y0, x3);
    if (!y0x3) return unknown(y0, x3);
    if ((*y0x3)[top] != 1) return malformed("m(x_{2n+3}, y0 x3) != 1 for y0 = " + r.label(y0), trace);

    // ys[i] = y_i; y_{-1} = x_{2n+3}.
    std::vector<Index> ys{y0};
    Index before = top;
    Index cur = y0;
    while (true) {
        const auto& q = r.product(cur, x3);
        if (!q) return unknown(cur, x3);
        trace.push_back("y_" + std::to_string(ys.size() - 1) + " x3 = " + to_string(r, *q));
        if (*q == RingElement::basic(before)) break;
        RingElement rem = *q - RingElement::basic(before);
        if (!is_nonnegative(rem)) return malformed("y_i x3 does not contain y_{i-1}", trace);
        Index next = smallest_component(r, rem, ties, "y_" + std::to_string(ys.size()));
        if (r.degree(next) >= r.degree(cur)) return malformed("descending chain does not descend at " + r.label(next), trace);
        ys.push_back(next);
        before = cur;
        cur = next;
    }
    const std::size_t k = ys.size() - 1;
    const Index yk = ys[k];
    auto Y = [&](std::ptrdiff_t i) { return i < 0 ? top : ys[static_cast<std::size_t>(i)]; };
    trace.push_back("chain stops at k = " + std::to_string(k) + " with y_k = " + r.label(yk));
    if (k > n) return malformed("chain longer than n", trace);

    // y_{k-t} = y_k x_{2t+1} for 1 <= t <= k+1.
    for (std::size_t t = 1; t <= k + 1; ++t) {
        const Index xt = cert.x_family[t];
        const auto& p = r.product(yk, xt);
        if (!p) return unknown(yk, xt);
        const Index want = Y(static_cast<std::ptrdiff_t>(k) - static_cast<std::ptrdiff_t>(t));
        if (*p != RingElement::basic(want))
            return malformed("y_{k-t} = y_k x_{2t+1} fails at t = " + std::to_string(t) + ": " + to_string(r, *p) +
                                 " vs " + r.label(want),
                             trace);
        trace.push_back("y_" + std::to_string(static_cast<std::ptrdiff_t>(k) - static_cast<std::ptrdiff_t>(t)) +
                        " = y_k " + xname(2 * t + 1) + " holds");
    }
    // Triple-lemma instances behind each inductive step.
    for (std::size_t s = 1; s <= k; ++s) {
        const Index a = Y(static_cast<std::ptrdiff_t>(k - s));
        const Index b = Y(static_cast<std::ptrdiff_t>(k - s) - 1);
        const auto& ap = r.product(yk, cert.xprime_family[s - 1]);
        const auto& prod = r.product(a, x3);
        if (!ap || !prod) continue;
        try {
            auto res = validate_triple(r, a, *ap, b, *prod);
            if (auto* v = std::get_if<TripleViolation>(&res))
                return malformed("triple decomposition not forced at s = " + std::to_string(s) + " (c = " +
                                     to_string(r, v->c) + ")",
                                 trace);
            trace.push_back("triple step s = " + std::to_string(s) + " forced");
        } catch (const PreconditionUnmet& e) {
            trace.push_back("triple step s = " + std::to_string(s) + " not applicable: " + e.what());
        }
    }

    if (k < n) {
        FailureBranch f;
        f.branch = LadderBranch::Eq3Impossible;
        f.diagnosis = xname(2 * n + 3) + " = y_k " + xname(2 * k + 3) + " with k = " + std::to_string(k) +
                      " < n = " + std::to_string(n) + "; this configuration cannot occur in a realizable ring";
        f.trace = std::move(trace);
        return f;
    }

    // k == n: y_n is a grouplike g and y0 = g x_{2n+1}.
    const Index g = yk;
    if (r.degree(g) != 1) return malformed("y_n is not grouplike", trace);
    const RingElement rest = top_times_x3 - RingElement::basic(prev);
    const RingElement z0 = rest - RingElement::basic(y0);
    trace.push_back("z0 = " + to_string(r, z0));
    if (z0.as_basic()) {
        const auto& gg = r.product(g, g);
        if (!gg) return unknown(g, g);
        if (*gg != RingElement::basic(r.unit())) return malformed("z0 is basic but g^2 != 1", trace);
        FailureBranch f;
        f.branch = LadderBranch::GrouplikeOrder2;
        f.diagnosis = "z0 basic forces g^2 = 1 for g = " + r.label(g);
        f.grouplike = g;
        f.trace = std::move(trace);
        return f;
    }
    if (n != 1) return malformed("z0 splits but |z0| = 2n+7 < 3(2n+1) for n = " + std::to_string(n), trace);

    // n = k = 1: z0 = u1 + u2 + u3 with u_i = h_i x3; {1, g, h_i} stabilize x5.
    const Index x5 = cert.x_family[2];
    for (const auto& [u, c] : z0.terms()) {
        if (r.degree(u) != 3 || c != 1) return malformed("component " + r.label(u) + " of z0 is not a simple of degree 3", trace);
        bool hit = false;
        for (Index h : r.grouplikes()) {
            const auto& hx = r.product(h, x3);
            if (hx && *hx == RingElement::basic(u)) {
                trace.push_back(r.label(u) + " = " + r.label(h) + " x3");
                hit = true;
                break;
            }
        }
        if (!hit) return malformed("no grouplike h with h x3 = " + r.label(u), trace);
    }
    std::set<Index> stab;
    for (Index h : r.grouplikes()) {
        const auto& hx = r.product(h, x5);
        if (!hx) return unknown(h, x5);
        if (*hx == RingElement::basic(x5)) stab.insert(h);
    }
    std::set<Index> seed2 = stab;
    seed2.insert(x5);
    std::set<Index> seed1 = seed2;
    seed1.insert(x3);
    auto r2 = closure(r, seed2, true);
    auto r1 = closure(r, seed1, true);
    if (std::holds_alternative<Incomplete>(r2) || std::holds_alternative<Incomplete>(r1))
        return malformed("forced subrings need Unknown products", trace);

    FailureBranch f;
    f.branch = LadderBranch::TerminalFreeness;
    f.grouplike = g;
    f.subrings = {std::get<StandardSubring>(r2), std::get<StandardSubring>(r1)};
    f.violations = freeness_obstructions(r, f.subrings);
    f.diagnosis = "k = n = 1: subrings of dimension " + std::to_string(f.subrings[0].hopf_dimension) + " inside " +
                  std::to_string(f.subrings[1].hopf_dimension) +
                  (f.violations.empty() ? "" : " violate dimension divisibility (realizability obstruction)");
    f.trace = std::move(trace);
    return f;
}

} // namespace detail

/// Builds x_{2n+1}, x'_{2n+1} with x_{2n+1} x3 = x_{2n-1} + x'_{2n+1} + x_{2n+3}
/// up to max_depth relations or the first Unknown product.
inline LadderCertificate ladder_build(const FusionRing& r, Index x3_in, std::size_t max_depth) {
    if (r.has_even_degree()) throw PreconditionUnmet("ladder needs a ring without even-degree simples");
    if (max_depth < 1) throw InvalidArgument("max_depth must be at least 1");
    auto chain = lemma33_selfdual_chain(r, x3_in);
    if (auto* g = std::get_if<GrouplikeFound>(&chain))
        throw PreconditionUnmet("ladder requires a self-dual x3; the case analysis found grouplike " +
                                r.label(g->grouplike) + " of order " + std::to_string(g->order));
    if (auto* f = std::get_if<ChainFailure>(&chain)) throw PreconditionUnmet("self-dual chain failed: " + f->diagnosis);
    const auto sd = std::get<SelfDual>(chain);

    LadderCertificate cert;
    cert.x3 = sd.x3;
    cert.x_family = {r.unit(), sd.x3, sd.x5};
    cert.xprime_family = {sd.x3};
    cert.relations.push_back({1, *r.product(sd.x3, sd.x3)});
    cert.depth = 1;

    for (std::size_t n = 1;; ++n) {
        if (cert.depth >= max_depth) {
            cert.terminal = TruncationReached{cert.depth, "requested depth reached"};
            break;
        }
        const Index top = cert.x_family[n + 1];
        const Index prev = cert.x_family[n];
        const auto& p = r.product(top, cert.x3);
        if (!p) {
            cert.terminal = TruncationReached{cert.depth, "product " + r.label(top) + "*" + r.label(cert.x3) + " is Unknown"};
            break;
        }
        const auto& prev_x3 = r.product(prev, cert.x3);
        if ((*p)[prev] != 1 || !prev_x3 || (*prev_x3)[top] != 1) {
            cert.terminal = detail::malformed("m(x_{2n+1}, x_{2n+3} x3) = m(x_{2n+3}, x_{2n+1} x3) = 1 fails at n = " +
                                              std::to_string(n));
            break;
        }
        const RingElement rest = *p - RingElement::basic(prev);
        if (rest.is_zero() || !is_nonnegative(rest)) {
            cert.terminal = detail::malformed("x_{2n+3} x3 - x_{2n+1} is not a nonzero comodule");
            break;
        }
        const Index y0 = detail::smallest_component(r, rest, cert.tie_breaks, "y0 at n = " + std::to_string(n));
        const Coeff target = static_cast<Coeff>(2 * n + 3);
        if (r.degree(y0) >= target) {
            const RingElement z0 = rest - RingElement::basic(y0);
            auto zb = z0.as_basic();
            if (r.degree(y0) != target || !zb || r.degree(*zb) != target + 2) {
                cert.terminal = detail::malformed("x_{2n+3} x3 - x_{2n+1} = " + to_string(r, rest) +
                                                  " is not x'_{2n+3} + x_{2n+5} with the expected degrees");
                break;
            }
            cert.xprime_family.push_back(y0);
            cert.x_family.push_back(*zb);
            cert.relations.push_back({n + 1, *p});
            ++cert.depth;
            continue;
        }
        cert.terminal = detail::descending_chain(r, cert, n, y0, *p, cert.tie_breaks);
        break;
    }
    return cert;
}

inline LadderCertificate ladder_build(const FusionRing& r, const std::string& x3, std::size_t max_depth) {
    return ladder_build(r, r.index_of(x3), max_depth);
}

/// Re-checks every recorded relation with fresh products, independent of
/// how the certificate was built. Returns the first problem found.
inline std::optional<std::string> verify_certificate(const FusionRing& r, const LadderCertificate& cert) {
    if (cert.relations.size() != cert.depth) return "relation count differs from depth";
    if (cert.x_family.size() != cert.depth + 2 || cert.xprime_family.size() != cert.depth)
        return "family sizes do not match depth";
    if (cert.x_family[0] != r.unit()) return "x_1 is not the unit";
    for (std::size_t k = 0; k < cert.x_family.size(); ++k)
        if (r.degree(cert.x_family[k]) != static_cast<Coeff>(2 * k + 1))
            return "x_" + std::to_string(2 * k + 1) + " has the wrong degree";
    for (std::size_t k = 0; k < cert.xprime_family.size(); ++k)
        if (r.degree(cert.xprime_family[k]) != static_cast<Coeff>(2 * k + 3))
            return "x'_" + std::to_string(2 * k + 3) + " has the wrong degree";
    const RingElement x3 = RingElement::basic(cert.x3);
    for (std::size_t n = 1; n <= cert.depth; ++n) {
        auto lhs = multiply(r, RingElement::basic(cert.x_family[n]), x3);
        if (!lhs) return "relation " + std::to_string(n) + " uses an Unknown product";
        RingElement rhs = RingElement::basic(cert.x_family[n - 1]) + RingElement::basic(cert.xprime_family[n - 1]) +
                          RingElement::basic(cert.x_family[n + 1]);
        if (*lhs != rhs) return "relation " + std::to_string(n) + " fails: " + to_string(r, *lhs) + " != " + to_string(r, rhs);
        if (cert.relations[n - 1].n != n || cert.relations[n - 1].product != *lhs)
            return "recorded relation " + std::to_string(n) + " differs from the product";
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verdict

struct ConclusionI {
    Index grouplike = 0;
    std::size_t order = 0;
    Index via = 0; // degree-3 element whose analysis produced it
};

struct ConclusionII {
    LadderCertificate certificate;
};

struct NoDegree3 {};

struct VerdictObstruction {
    std::string detail;
    std::optional<LadderCertificate> certificate;
};

struct Verdict {
    std::variant<ConclusionI, ConclusionII, NoDegree3, VerdictObstruction> outcome;
    std::vector<std::string> notes;

    bool is_obstruction() const { return std::holds_alternative<VerdictObstruction>(outcome); }
};

/// Runs the case analysis and the ladder on degree-3 elements in canonical
/// order until one of them yields a conclusion.
inline Verdict theorem_verdict(const FusionRing& r, std::size_t max_depth = 1000) {
    Verdict v;
    const auto axioms = check_axioms(r);
    if (axioms.any_fail()) {
        std::string failed;
        for (const auto& c : axioms.checks)
            if (c.status == CheckStatus::Fail) failed += (failed.empty() ? "" : ", ") + c.name;
        v.outcome = VerdictObstruction{"axiom checks failed: " + failed, std::nullopt};
        return v;
    }
    const auto threes = r.of_degree(3);
    if (threes.empty()) {
        v.outcome = NoDegree3{};
        return v;
    }

    bool decided = false;
    for (Index x : threes) {
        try {
            auto chain = lemma33_selfdual_chain(r, x);
            if (auto* g = std::get_if<GrouplikeFound>(&chain)) {
                v.outcome = ConclusionI{g->grouplike, g->order, x};
            } else if (auto* f = std::get_if<ChainFailure>(&chain)) {
                v.outcome = VerdictObstruction{"self-dual chain from " + r.label(x) + " failed: " + f->diagnosis, std::nullopt};
            } else {
                auto cert = ladder_build(r, std::get<SelfDual>(chain).x3, max_depth);
                if (cert.reached_truncation()) {
                    v.outcome = ConclusionII{std::move(cert)};
                } else {
                    const auto& fb = std::get<FailureBranch>(cert.terminal);
                    if (fb.branch == LadderBranch::GrouplikeOrder2 && fb.grouplike)
                        v.outcome = ConclusionI{*fb.grouplike, 2, x};
                    else
                        v.outcome = VerdictObstruction{"ladder from " + r.label(x) + ": " + std::string(to_string(fb.branch)) +
                                                           ": " + fb.diagnosis,
                                                       std::move(cert)};
                }
            }
            decided = true;
            break;
        } catch (const UnknownProduct& e) {
            v.notes.push_back("skipped " + r.label(x) + ": " + e.what());
        }
    }
    if (!decided) {
        v.outcome = VerdictObstruction{"no degree-3 element has the Known products the analysis needs", std::nullopt};
        return v;
    }

    if (auto* c1 = std::get_if<ConclusionI>(&v.outcome); c1 && r.is_complete()) {
        const Coeff dim = r.dimension();
        if (dim % 2 == 1) {
            if (dim % static_cast<Coeff>(c1->order) == 0) {
                v.notes.push_back("odd dimension " + std::to_string(dim) + " is divisible by " +
                                  std::to_string(c1->order));
            } else {
                v.outcome = VerdictObstruction{"grouplike of order " + std::to_string(c1->order) +
                                                   " does not divide the odd dimension " + std::to_string(dim),
                                               std::nullopt};
            }
        }
    }
    return v;
}

} // namespace fusionring
