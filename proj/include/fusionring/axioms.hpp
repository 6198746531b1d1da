#pragma once

/// Identity checks for Grothendieck rings of cosemisimple Hopf algebras.
///
/// Every check runs over all applicable basic pairs/triples in canonical
/// order and never short-circuits. An instance needing an Unknown product is
/// counted as skipped; a check reports Pass only with zero failures and zero
/// skips, so an "all Pass" report on a partial ring cannot happen by accident.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fusionring/ring.hpp"

namespace fusionring {

enum class CheckStatus { Pass, Fail, SkippedUnknown };

inline const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::SkippedUnknown: return "skipped_unknown";
    }
    return "?";
}

/// Offending instance: the basic labels involved and both sides' values.
struct Witness {
    std::vector<std::string> labels;
    std::string lhs;
    std::string rhs;
};

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::size_t evaluated = 0;
    std::size_t skipped = 0;
    std::size_t failed = 0;
    std::optional<Witness> witness;
};

struct CheckReport {
    std::string subject;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    bool any_fail() const {
        return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
    }
    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Pass; });
    }
    std::size_t total_skipped() const {
        std::size_t s = 0;
        for (const auto& c : checks) s += c.skipped;
        return s;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

namespace detail {

class CheckTally {
public:
    explicit CheckTally(std::string name) { result_.name = std::move(name); }

    void pass() { ++result_.evaluated; }
    void skip() { ++result_.skipped; }
    void fail(Witness w) {
        ++result_.evaluated;
        ++result_.failed;
        if (!result_.witness) result_.witness = std::move(w);
    }
    /// Records pass or fail; the witness is only built on failure.
    template <class MakeWitness>
    void expect(bool ok, MakeWitness&& make) {
        if (ok)
            pass();
        else
            fail(make());
    }

    CheckResult finish() && {
        if (result_.failed > 0)
            result_.status = CheckStatus::Fail;
        else if (result_.skipped > 0)
            result_.status = CheckStatus::SkippedUnknown;
        else
            result_.status = CheckStatus::Pass;
        return std::move(result_);
    }

private:
    CheckResult result_;
};

inline std::vector<std::string> labels_of(const FusionRing& r, std::initializer_list<Index> ix) {
    std::vector<std::string> out;
    for (Index i : ix) out.push_back(r.label(i));
    return out;
}

} // namespace detail

inline CheckResult check_unit_law(const FusionRing& r) {
    detail::CheckTally t("unit_law");
    const Index u = r.unit();
    for (Index x = 0; x < r.rank(); ++x) {
        for (bool left : {true, false}) {
            const auto& p = left ? r.product(u, x) : r.product(x, u);
            if (!p) {
                t.skip();
                continue;
            }
            t.expect(*p == RingElement::basic(x), [&] {
                return Witness{left ? detail::labels_of(r, {u, x}) : detail::labels_of(r, {x, u}), to_string(r, *p),
                               r.label(x)};
            });
        }
    }
    return std::move(t).finish();
}

inline CheckResult check_duality_pairing(const FusionRing& r) {
    detail::CheckTally t("duality_pairing");
    for (Index x = 0; x < r.rank(); ++x)
        for (Index y = 0; y < r.rank(); ++y) {
            const auto& p = r.product(x, y);
            if (!p) {
                t.skip();
                continue;
            }
            Coeff got = (*p)[r.unit()];
            Coeff want = y == r.dual_index(x) ? 1 : 0;
            t.expect(got == want, [&] {
                return Witness{detail::labels_of(r, {x, y}), "m(1,xy)=" + std::to_string(got), std::to_string(want)};
            });
        }
    return std::move(t).finish();
}

inline CheckResult check_associativity(const FusionRing& r) {
    detail::CheckTally t("associativity");
    for (Index a = 0; a < r.rank(); ++a)
        for (Index b = 0; b < r.rank(); ++b) {
            const auto& ab = r.product(a, b);
            for (Index c = 0; c < r.rank(); ++c) {
                const auto& bc = r.product(b, c);
                if (!ab || !bc) {
                    t.skip();
                    continue;
                }
                auto lhs = multiply(r, *ab, RingElement::basic(c));
                auto rhs = multiply(r, RingElement::basic(a), *bc);
                if (!lhs || !rhs) {
                    t.skip();
                    continue;
                }
                t.expect(*lhs == *rhs, [&] {
                    return Witness{detail::labels_of(r, {a, b, c}), to_string(r, *lhs), to_string(r, *rhs)};
                });
            }
        }
    return std::move(t).finish();
}

inline CheckResult check_degree_homomorphism(const FusionRing& r) {
    detail::CheckTally t("degree_homomorphism");
    for (Index a = 0; a < r.rank(); ++a)
        for (Index b = 0; b < r.rank(); ++b) {
            const auto& p = r.product(a, b);
            if (!p) {
                t.skip();
                continue;
            }
            Coeff got = degree(r, *p);
            Coeff want = checked_mul(r.degree(a), r.degree(b));
            t.expect(got == want, [&] {
                return Witness{detail::labels_of(r, {a, b}), "|ab|=" + std::to_string(got), std::to_string(want)};
            });
        }
    return std::move(t).finish();
}

/// x** = x with equal degrees, m(x,y) = m(x*,y*) on basic pairs, and
/// (ab)* = b*a* on every pair whose two products are Known.
inline CheckResult check_dual_compatibility(const FusionRing& r) {
    detail::CheckTally t("dual_compatibility");
    for (Index x = 0; x < r.rank(); ++x) {
        Index d = r.dual_index(x);
        t.expect(r.dual_index(d) == x && r.degree(d) == r.degree(x), [&] {
            return Witness{detail::labels_of(r, {x}), r.label(r.dual_index(d)), r.label(x)};
        });
        for (Index y = 0; y < r.rank(); ++y) {
            Coeff lhs = multiplicity(RingElement::basic(x), RingElement::basic(y));
            Coeff rhs = multiplicity(RingElement::basic(d), RingElement::basic(r.dual_index(y)));
            t.expect(lhs == rhs, [&] {
                return Witness{detail::labels_of(r, {x, y}), std::to_string(lhs), std::to_string(rhs)};
            });
        }
    }
    for (Index a = 0; a < r.rank(); ++a)
        for (Index b = 0; b < r.rank(); ++b) {
            const auto& ab = r.product(a, b);
            const auto& ba = r.product(r.dual_index(b), r.dual_index(a));
            if (!ab || !ba) {
                t.skip();
                continue;
            }
            RingElement lhs = dual(r, *ab);
            t.expect(lhs == *ba, [&] {
                return Witness{detail::labels_of(r, {a, b}), "(ab)*=" + to_string(r, lhs), to_string(r, *ba)};
            });
        }
    return std::move(t).finish();
}

/// m(x,yz) = m(y*,zx*) = m(y,xz*).
inline CheckResult check_frobenius_reciprocity(const FusionRing& r) {
    detail::CheckTally t("frobenius_reciprocity");
    for (Index x = 0; x < r.rank(); ++x)
        for (Index y = 0; y < r.rank(); ++y)
            for (Index z = 0; z < r.rank(); ++z) {
                const auto& yz = r.product(y, z);
                const auto& zx = r.product(z, r.dual_index(x));
                const auto& xz = r.product(x, r.dual_index(z));
                if (!yz || !zx || !xz) {
                    t.skip();
                    continue;
                }
                Coeff v1 = (*yz)[x];
                Coeff v2 = (*zx)[r.dual_index(y)];
                Coeff v3 = (*xz)[y];
                t.expect(v1 == v2 && v2 == v3, [&] {
                    return Witness{detail::labels_of(r, {x, y, z}), "m(x,yz)=" + std::to_string(v1),
                                   "m(y*,zx*)=" + std::to_string(v2) + " m(y,xz*)=" + std::to_string(v3)};
                });
            }
    return std::move(t).finish();
}

/// For grouplike g: m(g,xy) = 1 if y = x*g, else 0.
inline CheckResult check_grouplike_rule(const FusionRing& r) {
    detail::CheckTally t("grouplike_rule");
    for (Index g : r.grouplikes())
        for (Index x = 0; x < r.rank(); ++x) {
            const auto& xg = r.product(r.dual_index(x), g);
            for (Index y = 0; y < r.rank(); ++y) {
                const auto& xy = r.product(x, y);
                if (!xy || !xg) {
                    t.skip();
                    continue;
                }
                Coeff got = (*xy)[g];
                Coeff want = *xg == RingElement::basic(y) ? 1 : 0;
                t.expect(got == want, [&] {
                    return Witness{detail::labels_of(r, {g, x, y}), "m(g,xy)=" + std::to_string(got),
                                   std::to_string(want)};
                });
            }
        }
    return std::move(t).finish();
}

/// Runs every identity check in a fixed order.
inline CheckReport check_axioms(const FusionRing& r) {
    CheckReport rep;
    rep.subject = r.name();
    rep.checks.push_back(check_unit_law(r));
    rep.checks.push_back(check_duality_pairing(r));
    rep.checks.push_back(check_associativity(r));
    rep.checks.push_back(check_degree_homomorphism(r));
    rep.checks.push_back(check_dual_compatibility(r));
    rep.checks.push_back(check_frobenius_reciprocity(r));
    rep.checks.push_back(check_grouplike_rule(r));
    return rep;
}

/// Grouplikes g with m(g, xx*) = 1, in canonical order. Throws
/// UnknownProduct when xx* is Unknown.
inline std::vector<Index> stabilizer_by_multiplicity(const FusionRing& r, Index x) {
    const auto& xx = r.product(x, r.dual_index(x));
    if (!xx) throw UnknownProduct(r.label(x), r.label(r.dual_index(x)));
    std::vector<Index> out;
    for (Index g : r.grouplikes())
        if ((*xx)[g] == 1) out.push_back(g);
    return out;
}

/// Checks that the grouplikes in xx* form the stabilizer {g : gx = x}, a
/// group of order at most |x|^2.
inline CheckReport check_stabilizer_rule(const FusionRing& r, const std::string& label) {
    const Index x = r.index_of(label);
    const Index xd = r.dual_index(x);
    const auto& xx = r.product(x, xd);
    if (!xx) throw UnknownProduct(r.label(x), r.label(xd));

    CheckReport rep;
    rep.subject = "stabilizer of " + label;
    const auto gs = r.grouplikes();

    detail::CheckTally mult("stabilizer_multiplicity");
    detail::CheckTally equiv("stabilizer_equivalence");
    for (Index g : gs) {
        Coeff m = (*xx)[g];
        mult.expect(m == 0 || m == 1, [&] {
            return Witness{detail::labels_of(r, {g, x}), "m(g,xx*)=" + std::to_string(m), "0 or 1"};
        });
        const auto& gx = r.product(g, x);
        if (!gx) {
            equiv.skip();
            continue;
        }
        bool fixes = *gx == RingElement::basic(x);
        equiv.expect((m == 1) == fixes, [&] {
            return Witness{detail::labels_of(r, {g, x}), "m(g,xx*)=" + std::to_string(m), "gx=" + to_string(r, *gx)};
        });
    }

    const auto stab = stabilizer_by_multiplicity(r, x);
    detail::CheckTally group("stabilizer_subgroup");
    group.expect(std::find(stab.begin(), stab.end(), r.unit()) != stab.end(), [&] {
        return Witness{detail::labels_of(r, {r.unit(), x}), "unit not in stabilizer", "unit in stabilizer"};
    });
    for (Index g : stab)
        for (Index h : stab) {
            const auto& gh = r.product(g, h);
            if (!gh) {
                group.skip();
                continue;
            }
            auto b = gh->as_basic();
            bool ok = b && std::find(stab.begin(), stab.end(), *b) != stab.end();
            group.expect(ok, [&] {
                return Witness{detail::labels_of(r, {g, h, x}), "gh=" + to_string(r, *gh), "element of stabilizer"};
            });
        }

    detail::CheckTally bound("stabilizer_order_bound");
    Coeff limit = checked_mul(r.degree(x), r.degree(x));
    bound.expect(static_cast<Coeff>(stab.size()) <= limit, [&] {
        return Witness{detail::labels_of(r, {x}), "|stabilizer|=" + std::to_string(stab.size()),
                       "<= " + std::to_string(limit)};
    });

    rep.checks.push_back(std::move(mult).finish());
    rep.checks.push_back(std::move(equiv).finish());
    rep.checks.push_back(std::move(group).finish());
    rep.checks.push_back(std::move(bound).finish());

    std::string members = "stabilizer of " + label + " = {";
    for (std::size_t i = 0; i < stab.size(); ++i) members += (i ? ", " : "") + r.label(stab[i]);
    rep.notes.push_back(members + "}");
    return rep;
}

} // namespace fusionring
