#pragma once

// Text and JSON rendering of check reports, subrings, certificates, verdicts.
// JSON objects use nlohmann::json (keys sorted), so output is deterministic.

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fusionring/axioms.hpp"
#include "fusionring/subring.hpp"
#include "fusionring/theorem.hpp"

namespace fusionring {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// JSON

inline Json to_json(const FusionRing& r, const RingElement& e) {
    Json out = Json::array();
    for (const auto& [label, m] : decompose(r, e)) out.push_back({label, m});
    return out;
}

inline Json to_json(const CheckResult& c) {
    Json j{{"name", c.name},
           {"status", to_string(c.status)},
           {"evaluated", c.evaluated},
           {"skipped", c.skipped},
           {"failed", c.failed},
           {"witness", nullptr}};
    if (c.witness) j["witness"] = {{"labels", c.witness->labels}, {"lhs", c.witness->lhs}, {"rhs", c.witness->rhs}};
    return j;
}

inline Json to_json(const CheckReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) checks.push_back(to_json(c));
    return {{"subject", rep.subject}, {"checks", checks}, {"notes", rep.notes}};
}

inline Json to_json(const FusionRing& r, const StandardSubring& s) {
    return {{"members", member_labels(r, s)}, {"hopf_dimension", s.hopf_dimension}, {"closed_under_dual", s.closed_under_dual}};
}

inline Json to_json(const FusionRing& r, const FreenessViolation& v) {
    return {{"kind", "realizability_obstruction"}, {"inner", to_json(r, v.inner)}, {"outer", to_json(r, v.outer)}};
}

inline Json to_json(const FusionRing& r, const LadderCertificate& c) {
    auto labels = [&](const std::vector<Index>& ix) {
        std::vector<std::string> out;
        for (Index i : ix) out.push_back(r.label(i));
        return out;
    };
    Json rel = Json::array();
    for (const auto& x : c.relations) rel.push_back({{"n", x.n}, {"product", to_json(r, x.product)}});
    Json terminal;
    if (const auto* t = std::get_if<TruncationReached>(&c.terminal)) {
        terminal = {{"kind", "truncation_reached"}, {"depth", t->depth}, {"reason", t->reason}};
    } else {
        const auto& f = std::get<FailureBranch>(c.terminal);
        Json subs = Json::array(), viol = Json::array();
        for (const auto& s : f.subrings) subs.push_back(to_json(r, s));
        for (const auto& v : f.violations) viol.push_back(to_json(r, v));
        terminal = {{"kind", "failure_branch"},
                    {"branch", to_string(f.branch)},
                    {"diagnosis", f.diagnosis},
                    {"trace", f.trace},
                    {"grouplike", f.grouplike ? Json(r.label(*f.grouplike)) : Json(nullptr)},
                    {"subrings", subs},
                    {"violations", viol}};
    }
    return {{"x3", r.label(c.x3)},
            {"x_family", labels(c.x_family)},
            {"xprime_family", labels(c.xprime_family)},
            {"depth", c.depth},
            {"relations", rel},
            {"tie_breaks", c.tie_breaks},
            {"terminal", terminal}};
}

inline Json to_json(const FusionRing& r, const Verdict& v) {
    Json out;
    std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, ConclusionI>) {
                out = {{"kind", "conclusion_i"}, {"grouplike", r.label(o.grouplike)}, {"order", o.order}, {"via", r.label(o.via)}};
            } else if constexpr (std::is_same_v<T, ConclusionII>) {
                out = {{"kind", "conclusion_ii"}, {"certificate", to_json(r, o.certificate)}};
            } else if constexpr (std::is_same_v<T, NoDegree3>) {
                out = {{"kind", "no_degree_3"}};
            } else {
                out = {{"kind", "obstruction"}, {"detail", o.detail}, {"certificate", nullptr}};
                if (o.certificate) out["certificate"] = to_json(r, *o.certificate);
            }
        },
        v.outcome);
    out["notes"] = v.notes;
    return out;
}

// ---------------------------------------------------------------------------
// Text

inline std::string to_text(const CheckReport& rep) {
    std::ostringstream out;
    out << "== " << rep.subject << '\n';
    for (const auto& c : rep.checks) {
        out << "  " << c.name << ": " << to_string(c.status) << " (evaluated " << c.evaluated << ", skipped " << c.skipped
            << ", failed " << c.failed << ")\n";
        if (c.witness) {
            out << "    witness [";
            for (std::size_t i = 0; i < c.witness->labels.size(); ++i) out << (i ? " " : "") << c.witness->labels[i];
            out << "]: " << c.witness->lhs << " vs " << c.witness->rhs << '\n';
        }
    }
    for (const auto& n : rep.notes) out << "  note: " << n << '\n';
    return out.str();
}

inline std::string to_text(const FusionRing& r, const StandardSubring& s) {
    std::ostringstream out;
    out << "dim " << s.hopf_dimension << " {";
    const auto labels = member_labels(r, s);
    for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? ", " : "") << labels[i];
    out << '}';
    if (!s.closed_under_dual) out << " (not dual-closed)";
    return out.str();
}

inline std::string to_text(const FusionRing& r, const FreenessViolation& v) {
    return "realizability obstruction: " + std::to_string(v.inner.hopf_dimension) + " does not divide " +
           std::to_string(v.outer.hopf_dimension) + "; inner " + to_text(r, v.inner) + "; outer " + to_text(r, v.outer);
}

inline std::string to_text(const FusionRing& r, const LadderCertificate& c) {
    std::ostringstream out;
    out << "ladder from " << r.label(c.x3) << ", depth " << c.depth << '\n';
    for (const auto& rel : c.relations) {
        out << "  " << r.label(c.x_family[rel.n]) << " * " << r.label(c.x3) << " = " << to_string(r, rel.product) << '\n';
    }
    for (const auto& t : c.tie_breaks) out << "  tie-break: " << t << '\n';
    if (const auto* t = std::get_if<TruncationReached>(&c.terminal)) {
        out << "  terminal: truncation reached at depth " << t->depth << " (" << t->reason << ")\n";
    } else {
        const auto& f = std::get<FailureBranch>(c.terminal);
        out << "  terminal: " << to_string(f.branch) << ": " << f.diagnosis << '\n';
        for (const auto& line : f.trace) out << "    " << line << '\n';
        if (f.grouplike) out << "    grouplike " << r.label(*f.grouplike) << '\n';
        for (const auto& s : f.subrings) out << "    subring " << to_text(r, s) << '\n';
        for (const auto& v : f.violations) out << "    " << to_text(r, v) << '\n';
    }
    return out.str();
}

inline std::string to_text(const FusionRing& r, const Verdict& v) {
    std::ostringstream out;
    std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, ConclusionI>) {
                out << "verdict: conclusion (i): grouplike " << r.label(o.grouplike) << " of order " << o.order << " (via "
                    << r.label(o.via) << ")\n";
            } else if constexpr (std::is_same_v<T, ConclusionII>) {
                out << "verdict: conclusion (ii): ladder certified to depth " << o.certificate.depth << '\n'
                    << to_text(r, o.certificate);
            } else if constexpr (std::is_same_v<T, NoDegree3>) {
                out << "verdict: no degree-3 basic element\n";
            } else {
                out << "verdict: obstruction: " << o.detail << '\n';
                if (o.certificate) out << to_text(r, *o.certificate);
            }
        },
        v.outcome);
    for (const auto& n : v.notes) out << "note: " << n << '\n';
    return out.str();
}

} // namespace fusionring
