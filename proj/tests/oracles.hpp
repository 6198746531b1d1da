#pragma once

// Reference computations that share no code path with the library:
// weight multisets for SO(3), floating-point character inner products,
// modular addition for cyclic groups and brute-force subring search.

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fusionring/fusionring.hpp"

namespace oracle {

using fusionring::Coeff;
using fusionring::FusionRing;
using fusionring::Index;

/// Fixture file under the data directory.
inline std::string read_fixture(const std::string& rel) {
    std::ifstream in(std::string(FUSIONRING_DATA_DIR) + "/" + rel);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline FusionRing table_ring(const std::string& name) {
    return fusionring::char_table_ring(fusionring::parse_character_table(read_fixture("chartables/" + name + ".tbl")));
}

/// Decomposition of V_{d1} (x) V_{d2} for odd SO(3) dimensions by peeling
/// highest weights off the product weight multiset.
inline std::map<Coeff, Coeff> clebsch_gordan(Coeff d1, Coeff d2) {
    std::map<Coeff, Coeff> weights; // weight -> multiplicity
    const Coeff l1 = (d1 - 1) / 2, l2 = (d2 - 1) / 2;
    for (Coeff a = -l1; a <= l1; ++a)
        for (Coeff b = -l2; b <= l2; ++b) ++weights[a + b];
    std::map<Coeff, Coeff> out; // dimension -> multiplicity
    while (!weights.empty()) {
        const Coeff top = weights.rbegin()->first;
        const Coeff m = weights.rbegin()->second;
        out[2 * top + 1] += m;
        for (Coeff w = -top; w <= top; ++w) {
            weights[w] -= m;
            if (weights[w] == 0) weights.erase(w);
        }
    }
    return out;
}

/// Character table with complex values, evaluated in floating point.
struct NumericTable {
    std::vector<double> class_sizes;
    std::vector<std::vector<std::complex<double>>> chars;
    std::vector<std::string> labels;
    double order() const {
        double s = 0;
        for (double c : class_sizes) s += c;
        return s;
    }
};

inline std::complex<double> root(int n, int k) {
    const double t = 2.0 * M_PI * k / n;
    return {std::cos(t), std::sin(t)};
}

inline NumericTable numeric_a4() {
    const auto w = root(3, 1), w2 = root(3, 2);
    return {{1, 3, 4, 4},
            {{1, 1, 1, 1}, {1, 1, w, w2}, {1, 1, w2, w}, {3, -1, 0, 0}},
            {"1", "s", "s2", "x3"}};
}

inline NumericTable numeric_f21() {
    const auto w = root(3, 1), w2 = root(3, 2);
    const auto eta = root(7, 1) + root(7, 2) + root(7, 4);
    const auto etab = std::conj(eta);
    return {{1, 3, 3, 7, 7},
            {{1, 1, 1, 1, 1}, {1, 1, 1, w, w2}, {1, 1, 1, w2, w}, {3, eta, etab, 0, 0}, {3, etab, eta, 0, 0}},
            {"1", "s", "s2", "x3", "x3b"}};
}

inline NumericTable numeric_s3() {
    return {{1, 3, 2}, {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}}, {"1", "sgn", "x2"}};
}

/// Multiplicity of chi_k in chi_i chi_j, rounded; -1 if not near an integer.
inline Coeff inner_product(const NumericTable& t, std::size_t i, std::size_t j, std::size_t k) {
    std::complex<double> s = 0;
    for (std::size_t c = 0; c < t.class_sizes.size(); ++c)
        s += t.class_sizes[c] * t.chars[i][c] * t.chars[j][c] * std::conj(t.chars[k][c]);
    s /= t.order();
    const double r = std::round(s.real());
    if (std::abs(s.real() - r) > 1e-9 || std::abs(s.imag()) > 1e-9) return -1;
    return static_cast<Coeff>(r);
}

/// Every basis subset containing the unit and closed under duals and under
/// supports of all products; only for complete rings of small rank.
inline std::set<std::vector<Index>> brute_force_subrings(const FusionRing& r) {
    std::set<std::vector<Index>> out;
    const std::size_t n = r.rank();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        auto in = [&](Index i) { return (mask >> i) & 1u; };
        if (!in(r.unit())) continue;
        bool ok = true;
        for (Index a = 0; a < n && ok; ++a) {
            if (!in(a)) continue;
            if (!in(r.dual_index(a))) ok = false;
            for (Index b = 0; b < n && ok; ++b) {
                if (!in(b)) continue;
                for (const auto& [c, m] : r.product(a, b)->terms())
                    if (!in(c)) ok = false;
            }
        }
        if (!ok) continue;
        std::vector<Index> members;
        for (Index i = 0; i < n; ++i)
            if (in(i)) members.push_back(i);
        out.insert(members);
    }
    return out;
}

inline std::vector<Coeff> divisors(Coeff n) {
    std::vector<Coeff> d;
    for (Coeff k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

/// Complete fixture rings used by corpus-wide property tests.
inline std::vector<FusionRing> complete_corpus() {
    std::vector<FusionRing> out;
    for (Coeff n = 1; n <= 8; ++n) out.push_back(fusionring::cyclic_group_ring(n));
    for (const char* t : {"z3", "z5", "s3", "a4", "f21"}) out.push_back(table_ring(t));
    return out;
}

/// Complete and partial fixture rings.
inline std::vector<FusionRing> full_corpus() {
    auto out = complete_corpus();
    for (Coeff d : {3, 5, 9, 21}) out.push_back(fusionring::so3_truncated(d));
    out.push_back(fusionring::proof_fragment_ring());
    return out;
}

/// Structure constants as a dense n^3 array, N[a][b][c] = m(c, ab).
inline std::vector<Coeff> dense(const FusionRing& r) {
    const std::size_t n = r.rank();
    std::vector<Coeff> out(n * n * n, 0);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            for (const auto& [c, m] : r.product(a, b)->terms()) out[(a * n + b) * n + c] = m;
    return out;
}

/// Isomorphism by trying every degree-preserving relabeling.
inline bool isomorphic(const FusionRing& x, const FusionRing& y) {
    const std::size_t n = x.rank();
    if (y.rank() != n) return false;
    const auto nx = dense(x), ny = dense(y);
    std::vector<Index> perm(n);
    for (Index i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (Index i = 0; i < n && ok; ++i)
            ok = x.degree(i) == y.degree(perm[i]) && perm[x.dual_index(i)] == y.dual_index(perm[i]);
        for (Index a = 0; a < n && ok; ++a)
            for (Index b = 0; b < n && ok; ++b)
                for (Index c = 0; c < n && ok; ++c)
                    ok = nx[(a * n + b) * n + c] == ny[(perm[a] * n + perm[b]) * n + perm[c]];
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Number of groups of order n up to isomorphism, by brute force over
/// multiplication tables on {0..n-1} with identity 0. Small n only.
inline std::size_t group_count(std::size_t n) {
    std::vector<std::vector<std::size_t>> tables;
    std::vector<std::size_t> t(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) t[i] = t[i * n] = i;
    std::vector<std::size_t> cells;
    for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b) cells.push_back(a * n + b);
    auto is_group = [&] {
        for (std::size_t a = 0; a < n; ++a) {
            std::vector<bool> row(n), col(n);
            for (std::size_t b = 0; b < n; ++b) {
                if (row[t[a * n + b]] || col[t[b * n + a]]) return false;
                row[t[a * n + b]] = col[t[b * n + a]] = true;
            }
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) return false;
        return true;
    };
    std::size_t total = 1;
    for (std::size_t i = 0; i < cells.size(); ++i) total *= n;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t v = code;
        for (std::size_t c : cells) {
            t[c] = v % n;
            v /= n;
        }
        if (is_group()) tables.push_back(t);
    }
    std::vector<std::vector<std::size_t>> reps;
    for (const auto& g : tables) {
        bool seen = false;
        for (const auto& h : reps) {
            std::vector<std::size_t> p(n);
            for (std::size_t i = 0; i < n; ++i) p[i] = i;
            do {
                bool ok = p[0] == 0;
                for (std::size_t a = 0; a < n && ok; ++a)
                    for (std::size_t b = 0; b < n && ok; ++b) ok = p[g[a * n + b]] == h[p[a] * n + p[b]];
                if (ok) seen = true;
            } while (!seen && std::next_permutation(p.begin(), p.end()));
            if (seen) break;
        }
        if (!seen) reps.push_back(g);
    }
    return reps.size();
}

} // namespace oracle
