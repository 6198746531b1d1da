// Library walkthrough: build a ring, check it, run the degree-3 analysis,
// and look at the subrings of the hypothetical fragment.

#include <iostream>

#include "fusionring/fusionring.hpp"

using namespace fusionring;

int main() {
    // Odd SO(3) representations up to dimension 11; larger products Unknown.
    const FusionRing so3 = so3_truncated(11);
    std::cout << write_spec(so3) << '\n';

    const auto x3 = element_from_basis(so3, "x3");
    std::cout << "x3 * x3 = " << to_string(so3, multiply(so3, x3, x3)) << '\n';
    std::cout << to_text(check_axioms(so3)) << '\n';

    const Verdict v = theorem_verdict(so3);
    std::cout << to_text(so3, v) << '\n';

    // A ring built by hand: the group ring of Z2.
    const FusionRing z2 = FusionRingBuilder("Z2")
                              .basis("1", 1, "1")
                              .basis("t", 1, "t")
                              .unit("1")
                              .product("t", "t", {{"1", 1}})
                              .build();
    std::cout << "Z2 grouplike orders:";
    for (auto o : grouplike_group(z2).orders) std::cout << ' ' << o;
    std::cout << "\n\n";

    const FusionRing frag = proof_fragment_ring();
    for (const auto& viol : freeness_obstructions(frag)) std::cout << to_text(frag, viol) << '\n';
}
