#pragma once

/// Exact arithmetic in Z[zeta_N].
///
/// Values are integer coefficient vectors over zeta^0..zeta^{N-1} with
/// zeta^N = 1. Equality reduces modulo the N-th cyclotomic polynomial, whose
/// power basis 1, zeta, ..., zeta^{phi(N)-1} is a Z-basis of Z[zeta_N].

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fusionring/checked.hpp"
#include "fusionring/error.hpp"

namespace fusionring {

using Poly = std::vector<Coeff>; // low degree first

namespace detail {

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Quotient of a by monic b; throws if the division is not exact.
inline Poly exact_divide(Poly a, const Poly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) throw InvalidArgument("polynomial division by a larger divisor");
    Poly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        Coeff lead = a[i];
        q[i - db] = lead;
        if (lead == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = checked_sub(a[i - db + j], checked_mul(lead, b[j]));
    }
    trim(a);
    if (!a.empty()) throw InvalidArgument("inexact polynomial division");
    return q;
}

} // namespace detail

/// Coefficients of the n-th cyclotomic polynomial.
inline const Poly& cyclotomic_polynomial(std::size_t n) {
    static std::map<std::size_t, Poly> cache;
    if (n == 0) throw InvalidArgument("conductor must be positive");
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Poly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (std::size_t d = 1; d < n; ++d)
        if (n % d == 0) p = detail::exact_divide(p, cyclotomic_polynomial(d));
    return cache.emplace(n, std::move(p)).first->second;
}

class Cyclotomic {
public:
    explicit Cyclotomic(std::size_t conductor = 1) : coeffs_(conductor, 0) {
        if (conductor == 0) throw InvalidArgument("conductor must be positive");
    }

    static Cyclotomic integer(std::size_t conductor, Coeff k) {
        Cyclotomic c(conductor);
        c.coeffs_[0] = k;
        return c;
    }
    static Cyclotomic zeta_power(std::size_t conductor, std::size_t e, Coeff k = 1) {
        Cyclotomic c(conductor);
        c.coeffs_[e % conductor] = k;
        return c;
    }

    std::size_t conductor() const noexcept { return coeffs_.size(); }
    const std::vector<Coeff>& coefficients() const noexcept { return coeffs_; }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        same_field(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
        return *this;
    }
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.same_field(b);
        const std::size_t n = a.conductor();
        Cyclotomic out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b.coeffs_[j] == 0) continue;
                auto& slot = out.coeffs_[(i + j) % n];
                slot = checked_add(slot, checked_mul(a.coeffs_[i], b.coeffs_[j]));
            }
        }
        return out;
    }

    Cyclotomic scaled(Coeff k) const {
        Cyclotomic out = *this;
        for (auto& c : out.coeffs_) c = checked_mul(c, k);
        return out;
    }

    /// Complex conjugate: zeta^i -> zeta^{N-i}.
    Cyclotomic conj() const {
        const std::size_t n = conductor();
        Cyclotomic out(n);
        for (std::size_t i = 0; i < n; ++i) out.coeffs_[(n - i) % n] = coeffs_[i];
        return out;
    }

    /// Canonical coordinates in the power basis of length phi(N).
    Poly reduced() const {
        const Poly& phi = cyclotomic_polynomial(conductor());
        const std::size_t d = phi.size() - 1;
        Poly a = coeffs_;
        for (std::size_t i = a.size(); i-- > d;) {
            Coeff lead = a[i];
            if (lead == 0) continue;
            for (std::size_t j = 0; j <= d; ++j) a[i - d + j] = checked_sub(a[i - d + j], checked_mul(lead, phi[j]));
        }
        a.resize(d);
        return a;
    }

    /// The value as an ordinary integer, if it is one.
    std::optional<Coeff> as_integer() const {
        Poly r = reduced();
        for (std::size_t i = 1; i < r.size(); ++i)
            if (r[i] != 0) return std::nullopt;
        return r.empty() ? 0 : r[0];
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.conductor() == b.conductor() && a.reduced() == b.reduced();
    }

private:
    void same_field(const Cyclotomic& o) const {
        if (o.conductor() != conductor()) throw InvalidArgument("cyclotomic values with different conductors");
    }

    std::vector<Coeff> coeffs_;
};

/// Parses "c0+c1*z+c2*z^2-z^5" style polynomials in z = zeta_N.
/// Returns nullopt with an offset into text on malformed input.
inline std::optional<Cyclotomic> parse_cyclotomic(const std::string& text, std::size_t conductor,
                                                  std::size_t* error_offset = nullptr) {
    Cyclotomic out(conductor);
    std::size_t i = 0;
    auto fail = [&](std::size_t at) -> std::optional<Cyclotomic> {
        if (error_offset) *error_offset = at;
        return std::nullopt;
    };
    auto digits = [&](Coeff& v) {
        std::size_t start = i;
        v = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            v = checked_add(checked_mul(v, 10), text[i] - '0');
            ++i;
        }
        return i > start;
    };
    if (text.empty()) return fail(0);
    bool first = true;
    while (i < text.size()) {
        Coeff sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            return fail(i);
        }
        first = false;
        Coeff k = 1;
        bool has_num = digits(k);
        if (!has_num) k = 1;
        std::size_t e = 0;
        if (i < text.size() && text[i] == '*') {
            if (!has_num) return fail(i);
            ++i;
            if (i >= text.size() || text[i] != 'z') return fail(i);
        }
        if (i < text.size() && text[i] == 'z') {
            ++i;
            e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                Coeff ev;
                if (!digits(ev)) return fail(i);
                e = static_cast<std::size_t>(ev);
            }
        } else if (!has_num) {
            return fail(i);
        }
        out += Cyclotomic::zeta_power(conductor, e, checked_mul(sign, k));
    }
    return out;
}

} // namespace fusionring
