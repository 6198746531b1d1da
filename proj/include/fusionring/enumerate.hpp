#pragma once

/// Exhaustive search for fusion rings with prescribed degrees.
///
/// The unknowns are the triple invariants T(a,b,c) = m(1, abc), so that
/// m(c, ab) = T(a,b,c*). Frobenius reciprocity makes T invariant under
/// rotation (a,b,c) -> (b,c,a) and dual compatibility under
/// (a,b,c) -> (c*,b*,a*); one variable is assigned per orbit. Branches are
/// pruned by degree sums and by associativity on completed rows, and every
/// leaf is re-checked by check_axioms and the stabilizer rule.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "fusionring/axioms.hpp"
#include "fusionring/ring.hpp"

namespace fusionring {

struct RingSearchOptions {
    Coeff max_mult = 2;
    std::size_t max_rank = 6;
    bool odd_only = true;
    unsigned threads = 0; // 0: FUSIONRING_THREADS, else hardware concurrency
};

/// Worker count from FUSIONRING_THREADS, defaulting to the machine's.
inline unsigned default_thread_count() {
    if (const char* env = std::getenv("FUSIONRING_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {

/// Basis order used by the canonical form: unit first, then (degree, index).
inline std::vector<Index> unit_first_order(const FusionRing& r) {
    std::vector<Index> ord(r.rank());
    for (Index i = 0; i < r.rank(); ++i) ord[i] = i;
    std::stable_sort(ord.begin(), ord.end(), [&](Index x, Index y) {
        bool ux = x == r.unit(), uy = y == r.unit();
        if (ux != uy) return ux;
        return r.degree(x) < r.degree(y);
    });
    return ord;
}

/// Calls f(perm) for every permutation of positions that maps each block of
/// equal degree to itself and fixes position 0.
inline void for_each_block_permutation(const std::vector<Coeff>& degs,
                                       const std::function<void(const std::vector<std::size_t>&)>& f) {
    const std::size_t n = degs.size();
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 1; i < n;) {
        std::size_t j = i;
        while (j < n && degs[j] == degs[i]) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == blocks.size()) {
            f(perm);
            return;
        }
        auto [lo, hi] = blocks[k];
        std::sort(perm.begin() + static_cast<long>(lo), perm.begin() + static_cast<long>(hi));
        do {
            rec(k + 1);
        } while (std::next_permutation(perm.begin() + static_cast<long>(lo), perm.begin() + static_cast<long>(hi)));
    };
    rec(0);
}

} // namespace detail

/// Relabeling-invariant encoding of a complete ring: degrees, duals and the
/// full structure-constant table, minimized over permutations inside
/// equal-degree blocks with the unit held first.
inline std::vector<Coeff> canonical_encoding(const FusionRing& r) {
    if (!r.is_complete()) throw PreconditionUnmet("canonical encoding needs a complete ring");
    const auto ord = detail::unit_first_order(r);
    const std::size_t n = r.rank();
    std::vector<Coeff> degs(n);
    for (std::size_t i = 0; i < n; ++i) degs[i] = r.degree(ord[i]);

    std::vector<Coeff> best;
    std::vector<std::size_t> pos_of(n);
    detail::for_each_block_permutation(degs, [&](const std::vector<std::size_t>& perm) {
        // perm[p] is the position in ord placed at new position p.
        for (std::size_t p = 0; p < n; ++p) pos_of[ord[perm[p]]] = p;
        std::vector<Coeff> enc(degs);
        for (std::size_t p = 0; p < n; ++p) enc.push_back(static_cast<Coeff>(pos_of[r.dual_index(ord[perm[p]])]));
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                const auto& prod = *r.product(ord[perm[p]], ord[perm[q]]);
                std::vector<Coeff> row(n, 0);
                for (const auto& [c, m] : prod.terms()) row[pos_of[c]] = m;
                enc.insert(enc.end(), row.begin(), row.end());
            }
        if (best.empty() || enc < best) best = std::move(enc);
    });
    return best;
}

namespace detail {

inline std::vector<std::string> search_labels(const std::vector<Coeff>& degs) {
    std::map<Coeff, std::size_t> count;
    for (Coeff d : degs) ++count[d];
    std::vector<std::string> out;
    std::map<Coeff, std::size_t> seen;
    for (Coeff d : degs) {
        std::size_t k = seen[d]++;
        if (d == 1) out.push_back(k == 0 ? "1" : "g" + std::to_string(k));
        else if (count[d] == 1) out.push_back("x" + std::to_string(d));
        else if (k < 26) out.push_back("x" + std::to_string(d) + static_cast<char>('a' + k));
        else out.push_back("x" + std::to_string(d) + "_" + std::to_string(k));
    }
    return out;
}

/// Rebuilds a ring from a canonical encoding with generated labels.
inline FusionRing ring_from_encoding(const std::vector<Coeff>& enc, std::size_t n, const std::string& name) {
    std::vector<Coeff> degs(enc.begin(), enc.begin() + static_cast<long>(n));
    auto labels = search_labels(degs);
    FusionRingBuilder b(name);
    for (std::size_t i = 0; i < n; ++i) b.basis(labels[i], degs[i], labels[static_cast<std::size_t>(enc[n + i])]);
    b.unit(labels[0]);
    const std::size_t base = 2 * n;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
            FusionRingBuilder::Terms terms;
            for (std::size_t d = 0; d < n; ++d)
                if (Coeff m = enc[base + (a * n + c) * n + d]) terms.emplace_back(labels[d], m);
            b.product(labels[a], labels[c], std::move(terms));
        }
    return b.build();
}

class RingSearch {
public:
    RingSearch(std::vector<Coeff> degs, std::vector<std::size_t> dual, Coeff max_mult)
        : n_(degs.size()), deg_(std::move(degs)), dual_(std::move(dual)), max_mult_(max_mult),
          t_(n_ * n_ * n_, -1), var_of_(n_ * n_ * n_, npos) {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                for (std::size_t c = 0; c < n_; ++c)
                    if (a == 0 || b == 0 || c == 0) t_[at(a, b, c)] = unit_triple(a, b, c);
        // One variable per orbit, introduced row by row so rows fill early.
        for (std::size_t a = 1; a < n_; ++a)
            for (std::size_t b = 1; b < n_; ++b)
                for (std::size_t c = 1; c < n_; ++c) {
                    if (var_of_[at(a, b, c)] != npos) continue;
                    Var v;
                    std::vector<std::array<std::size_t, 3>> stack{{a, b, c}};
                    while (!stack.empty()) {
                        auto [x, y, z] = stack.back();
                        stack.pop_back();
                        if (var_of_[at(x, y, z)] != npos) continue;
                        var_of_[at(x, y, z)] = vars_.size();
                        v.cells.push_back(at(x, y, z));
                        v.rows.insert(x * n_ + y);
                        stack.push_back({y, z, x});
                        stack.push_back({dual_[z], dual_[y], dual_[x]});
                    }
                    v.cap = max_mult_;
                    for (std::size_t cell : v.cells) {
                        std::size_t x = cell / (n_ * n_), y = (cell / n_) % n_, z = cell % n_;
                        v.cap = std::min(v.cap, deg_[x] * deg_[y] / deg_[z]);
                    }
                    vars_.push_back(std::move(v));
                }
    }

    std::size_t variable_count() const { return vars_.size(); }
    Coeff cap(std::size_t k) const { return vars_[k].cap; }

    /// Runs the search with variable 0 fixed to `first` (if any variables).
    void run(Coeff first, const std::function<void(const std::vector<Coeff>&)>& emit) {
        emit_ = &emit;
        if (vars_.empty()) {
            if (first == 0 && rows_feasible_all()) leaf();
            return;
        }
        if (assign(0, first)) descend(1);
        unassign(0);
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    struct Var {
        std::vector<std::size_t> cells;
        std::set<std::size_t> rows;
        Coeff cap = 0;
    };

    std::size_t at(std::size_t a, std::size_t b, std::size_t c) const { return (a * n_ + b) * n_ + c; }

    // m(1, abc) when one factor is the unit: the duality pairing of the rest.
    Coeff unit_triple(std::size_t a, std::size_t b, std::size_t c) const {
        std::vector<std::size_t> rest;
        for (std::size_t x : {a, b, c})
            if (x != 0) rest.push_back(x);
        if (rest.empty()) return 1;
        if (rest.size() == 1) return 0;
        return dual_[rest[0]] == rest[1] ? 1 : 0;
    }
    // m(c, ab)
    Coeff mult(std::size_t a, std::size_t b, std::size_t c) const { return t_[at(a, b, dual_[c])]; }

    bool row_complete(std::size_t a, std::size_t b) const {
        for (std::size_t c = 0; c < n_; ++c)
            if (t_[at(a, b, c)] < 0) return false;
        return true;
    }

    bool row_feasible(std::size_t a, std::size_t b) const {
        Coeff sum = 0, room = 0;
        for (std::size_t c = 0; c < n_; ++c) {
            Coeff v = t_[at(a, b, c)];
            if (v >= 0) sum += v * deg_[c];
            else room += vars_[var_of_[at(a, b, c)]].cap * deg_[c];
        }
        const Coeff target = deg_[a] * deg_[b];
        return sum <= target && sum + room >= target;
    }

    bool rows_feasible_all() const {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (!row_feasible(a, b)) return false;
        return true;
    }

    /// Associativity on every basic triple whose products are all settled.
    bool associative_so_far() const {
        std::vector<Coeff> lhs(n_), rhs(n_);
        for (std::size_t a = 1; a < n_; ++a)
            for (std::size_t b = 1; b < n_; ++b) {
                if (!row_complete(a, b)) continue;
                for (std::size_t c = 1; c < n_; ++c) {
                    if (!row_complete(b, c)) continue;
                    bool ok = true;
                    std::fill(lhs.begin(), lhs.end(), 0);
                    std::fill(rhs.begin(), rhs.end(), 0);
                    for (std::size_t d = 0; d < n_ && ok; ++d) {
                        Coeff k = mult(a, b, d);
                        if (k == 0) continue;
                        if (!row_complete(d, c)) ok = false;
                        else
                            for (std::size_t e = 0; e < n_; ++e) lhs[e] += k * mult(d, c, e);
                    }
                    for (std::size_t d = 0; d < n_ && ok; ++d) {
                        Coeff k = mult(b, c, d);
                        if (k == 0) continue;
                        if (!row_complete(a, d)) ok = false;
                        else
                            for (std::size_t e = 0; e < n_; ++e) rhs[e] += k * mult(a, d, e);
                    }
                    if (ok && lhs != rhs) return false;
                }
            }
        return true;
    }

    bool assign(std::size_t k, Coeff value) {
        for (std::size_t cell : vars_[k].cells) t_[cell] = value;
        bool completed = false;
        for (std::size_t row : vars_[k].rows) {
            if (!row_feasible(row / n_, row % n_)) return false;
            completed = completed || row_complete(row / n_, row % n_);
        }
        return !completed || associative_so_far();
    }

    void unassign(std::size_t k) {
        for (std::size_t cell : vars_[k].cells) t_[cell] = -1;
    }

    void descend(std::size_t k) {
        if (k == vars_.size()) {
            leaf();
            return;
        }
        for (Coeff v = 0; v <= vars_[k].cap; ++v) {
            if (assign(k, v)) descend(k + 1);
            unassign(k);
        }
    }

    void leaf() {
        std::vector<Coeff> enc(deg_);
        for (std::size_t i = 0; i < n_; ++i) enc.push_back(static_cast<Coeff>(dual_[i]));
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                for (std::size_t c = 0; c < n_; ++c) enc.push_back(mult(a, b, c));
        (*emit_)(enc);
    }

    std::size_t n_;
    std::vector<Coeff> deg_;
    std::vector<std::size_t> dual_;
    Coeff max_mult_;
    std::vector<Coeff> t_;
    std::vector<std::size_t> var_of_;
    std::vector<Var> vars_;
    const std::function<void(const std::vector<Coeff>&)>* emit_ = nullptr;
};

/// Involutions of {0..n-1} fixing 0 and preserving each equal-degree block.
inline std::vector<std::vector<std::size_t>> block_involutions(const std::vector<Coeff>& degs) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    const std::size_t n = degs.size();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> inv(n, unset);
    inv[0] = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        while (i < n && inv[i] != unset) ++i;
        if (i == n) {
            out.push_back(inv);
            return;
        }
        inv[i] = i;
        rec(i + 1);
        for (std::size_t j = i + 1; j < n && degs[j] == degs[i]; ++j) {
            if (inv[j] != unset) continue;
            inv[i] = j;
            inv[j] = i;
            rec(i + 1);
            inv[j] = unset;
        }
        inv[i] = unset;
    };
    rec(1);
    return out;
}

} // namespace detail

/// All fusion rings with the given degrees (unit included as one of the 1s)
/// and multiplicities at most max_mult, one per relabeling class within
/// equal-degree blocks, sorted by canonical encoding.
inline std::vector<FusionRing> enumerate_rings(std::vector<Coeff> degrees, const RingSearchOptions& opt = {}) {
    if (degrees.size() > opt.max_rank) throw RankTooLarge(degrees.size(), opt.max_rank);
    if (opt.max_mult < 0) throw InvalidArgument("max multiplicity must be nonnegative");
    for (Coeff d : degrees) {
        if (d < 1) throw InvalidArgument("degrees must be positive");
        if (opt.odd_only && d % 2 == 0) throw InvalidArgument("even degree " + std::to_string(d) + " rejected (odd-only search)");
    }
    if (std::find(degrees.begin(), degrees.end(), Coeff{1}) == degrees.end())
        throw InvalidArgument("degrees must include 1 for the unit");
    std::sort(degrees.begin(), degrees.end());
    const std::size_t n = degrees.size();

    struct Task {
        std::size_t involution;
        Coeff first;
    };
    auto involutions = detail::block_involutions(degrees);
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < involutions.size(); ++i) {
        detail::RingSearch probe(degrees, involutions[i], opt.max_mult);
        Coeff top = probe.variable_count() ? probe.cap(0) : 0;
        for (Coeff v = 0; v <= top; ++v) tasks.push_back({i, v});
    }

    std::set<std::vector<Coeff>> found;
    std::mutex mu;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++) {
            detail::RingSearch search(degrees, involutions[tasks[t].involution], opt.max_mult);
            std::function<void(const std::vector<Coeff>&)> emit = [&](const std::vector<Coeff>& enc) {
                FusionRing r = detail::ring_from_encoding(enc, n, "candidate");
                if (!check_axioms(r).all_pass()) return;
                for (Index x = 0; x < r.rank(); ++x)
                    if (check_stabilizer_rule(r, r.label(x)).any_fail()) return;
                auto canon = canonical_encoding(r);
                std::lock_guard lock(mu);
                found.insert(std::move(canon));
            };
            search.run(tasks[t].first, emit);
        }
    };
    const unsigned threads = std::min<std::size_t>(opt.threads ? opt.threads : default_thread_count(), std::max<std::size_t>(tasks.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::vector<FusionRing> out;
    std::size_t k = 0;
    for (const auto& enc : found) out.push_back(detail::ring_from_encoding(enc, n, "search_" + std::to_string(++k)));
    return out;
}

} // namespace fusionring
