#pragma once

// Reference rings built from closed-form rules: cyclic group rings, the
// odd part of the SO(3) representation ring truncated at a degree bound,
// and the hypothetical configuration that ends the ladder argument.

#include <array>
#include <string>

#include "fusionring/ring.hpp"

namespace fusionring {

/// Label of g^k in cyclic_group_ring: "1", "g", "g2", ...
inline std::string cyclic_label(Coeff k) {
    if (k == 0) return "1";
    if (k == 1) return "g";
    return "g" + std::to_string(k);
}

inline FusionRing cyclic_group_ring(Coeff n) {
    if (n < 1) throw InvalidArgument("cyclic group order must be positive");
    FusionRingBuilder b("Z" + std::to_string(n));
    for (Coeff k = 0; k < n; ++k) b.basis(cyclic_label(k), 1, cyclic_label((n - k) % n));
    b.unit("1");
    for (Coeff i = 0; i < n; ++i)
        for (Coeff j = 0; j < n; ++j) b.product(cyclic_label(i), cyclic_label(j), {{cyclic_label((i + j) % n), 1}});
    return b.build();
}

/// Label of the degree-d simple in so3_truncated: "1", "x3", "x5", ...
inline std::string so3_label(Coeff d) { return d == 1 ? "1" : "x" + std::to_string(d); }

/// x_{2a+1} x_{2b+1} = sum_{c=|a-b|}^{a+b} x_{2c+1}; products whose top
/// term passes max_degree are Unknown.
inline FusionRing so3_truncated(Coeff max_degree) {
    if (max_degree < 3 || max_degree % 2 == 0) throw InvalidArgument("SO(3) truncation degree must be odd and at least 3");
    const Coeff top = (max_degree - 1) / 2;
    FusionRingBuilder b("SO3_" + std::to_string(max_degree));
    b.partial(true).truncation(max_degree);
    for (Coeff a = 0; a <= top; ++a) b.basis(so3_label(2 * a + 1), 2 * a + 1, so3_label(2 * a + 1));
    b.unit("1");
    for (Coeff a = 0; a <= top; ++a)
        for (Coeff c = 0; c <= top; ++c) {
            if (a + c > top) continue;
            FusionRingBuilder::Terms terms;
            for (Coeff k = a > c ? a - c : c - a; k <= a + c; ++k) terms.emplace_back(so3_label(2 * k + 1), 1);
            b.product(so3_label(2 * a + 1), so3_label(2 * c + 1), std::move(terms));
        }
    return b.build();
}

/// The k = n = 1 configuration: V = {1, g, h1, h2, h3} cyclic of order 5
/// (g generates; h1 = g^2, h2 = g^3, h3 = g^4), x3 with x3^2 = 1 + x3 + x5
/// and trivial stabilizer, its translates v x3, and x5 with stabilizer V.
///
/// x3 is taken to commute with V, so (v x3)* = v^-1 x3. Known products are
/// those stated directly plus their left translates by V; every other
/// product stays Unknown.
inline FusionRing proof_fragment_ring() {
    const std::array<std::string, 5> v = {"1", "g", "h1", "h2", "h3"};
    auto vx3 = [&](int e) { return e == 0 ? std::string("x3") : v[static_cast<std::size_t>(e)] + "x3"; };
    auto mod5 = [](int e) { return ((e % 5) + 5) % 5; };

    FusionRingBuilder b("fragment");
    b.partial(true);
    for (int e = 0; e < 5; ++e) {
        b.basis(v[e], 1, v[mod5(-e)]);
        b.basis(vx3(e), 3, vx3(mod5(-e)));
    }
    b.basis("x5", 5, "x5");
    b.unit("1");

    FusionRingBuilder::Terms all_x3, x5_squared{{"x5", 4}};
    for (int e = 0; e < 5; ++e) {
        all_x3.emplace_back(vx3(e), 1);
        x5_squared.emplace_back(v[e], 1);
    }

    for (int e = 0; e < 5; ++e) {
        for (int f = 0; f < 5; ++f) {
            if (e != 0 && f != 0) b.product(v[e], v[f], {{v[mod5(e + f)], 1}});
            if (e != 0) b.product(v[e], vx3(f), {{vx3(mod5(e + f)), 1}});
        }
        if (e != 0) {
            b.product(v[e], "x5", {{"x5", 1}});
            b.product("x5", v[e], {{"x5", 1}});
        }
        b.product(vx3(e), "x3", {{v[e], 1}, {vx3(e), 1}, {"x5", 1}});
        b.product(vx3(e), "x5", all_x3);
        b.product("x5", vx3(e), all_x3);
    }
    b.product("x5", "x5", x5_squared);
    return b.build();
}

} // namespace fusionring
