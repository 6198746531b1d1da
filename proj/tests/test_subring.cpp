#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace fusionring;

namespace {

StandardSubring closed(const FusionRing& r, std::vector<std::string> seed) {
    auto res = closure(r, seed);
    EXPECT_TRUE(std::holds_alternative<StandardSubring>(res));
    return std::get<StandardSubring>(res);
}

std::vector<Coeff> dims(const std::vector<StandardSubring>& subs) {
    std::vector<Coeff> out;
    for (const auto& s : subs) out.push_back(s.hopf_dimension);
    return out;
}

} // namespace

TEST(Closure, UnitSeed) {
    auto r = oracle::table_ring("a4");
    auto s = closed(r, {"1"});
    EXPECT_EQ(member_labels(r, s), std::vector<std::string>{"1"});
    EXPECT_EQ(s.hopf_dimension, 1);
}

TEST(Closure, FragmentX5GivesDimension30) {
    auto r = proof_fragment_ring();
    auto s = closed(r, {"x5"});
    EXPECT_EQ(member_labels(r, s), (std::vector<std::string>{"1", "g", "h1", "h2", "h3", "x5"}));
    EXPECT_EQ(s.hopf_dimension, 30);
    EXPECT_EQ(s.hopf_dimension, 5 * 1 + 5 * 5);
}

TEST(Closure, FragmentX3GivesDimension75) {
    auto r = proof_fragment_ring();
    auto s = closed(r, {"x3"});
    EXPECT_EQ(s.members.size(), 11u);
    EXPECT_EQ(s.hopf_dimension, 75);
    EXPECT_EQ(s.hopf_dimension, 5 * 1 * 1 + 5 * 3 * 3 + 5 * 5);
}

TEST(Closure, IncompleteWhenUnknownNeeded) {
    auto r = so3_truncated(9);
    auto res = closure(r, std::vector<std::string>{"x3"});
    ASSERT_TRUE(std::holds_alternative<Incomplete>(res));
    auto gap = std::get<Incomplete>(res);
    EXPECT_FALSE(r.product(gap.left, gap.right).has_value());
}

TEST(Closure, MonotoneIdempotentExtensive) {
    for (const auto& r : oracle::complete_corpus())
        for (Index x = 0; x < r.rank(); ++x) {
            auto s = std::get<StandardSubring>(closure(r, std::set<Index>{x}));
            EXPECT_TRUE(s.contains(x));
            EXPECT_TRUE(s.contains(r.unit()));
            EXPECT_TRUE(s.closed_under_dual);
            std::set<Index> again(s.members.begin(), s.members.end());
            EXPECT_EQ(std::get<StandardSubring>(closure(r, again)), s);
            for (Index y = 0; y < r.rank(); ++y) {
                auto t = std::get<StandardSubring>(closure(r, std::set<Index>{x, y}));
                EXPECT_TRUE(s.is_subset_of(t));
            }
        }
}

TEST(EnumerateSubrings, CyclicMatchesDivisorLattice) {
    for (Coeff n = 1; n <= 8; ++n) {
        auto r = cyclic_group_ring(n);
        EXPECT_EQ(dims(enumerate_standard_subrings(r)), oracle::divisors(n)) << n;
    }
    EXPECT_EQ(dims(enumerate_standard_subrings(cyclic_group_ring(5))), (std::vector<Coeff>{1, 5}));
    EXPECT_EQ(dims(enumerate_standard_subrings(cyclic_group_ring(6))), (std::vector<Coeff>{1, 2, 3, 6}));
}

TEST(EnumerateSubrings, A4HasDimensions1_3_12) {
    EXPECT_EQ(dims(enumerate_standard_subrings(oracle::table_ring("a4"))), (std::vector<Coeff>{1, 3, 12}));
}

TEST(EnumerateSubrings, MatchesBruteForceOnCorpus) {
    for (const auto& r : oracle::complete_corpus()) {
        auto subs = enumerate_standard_subrings(r);
        std::set<std::vector<Index>> got;
        for (const auto& s : subs) got.insert(s.members);
        EXPECT_EQ(got, oracle::brute_force_subrings(r)) << r.name();
        SubringEnumerationOptions ps;
        ps.power_set = true;
        EXPECT_EQ(enumerate_standard_subrings(r, ps), subs) << r.name();
    }
}

TEST(EnumerateSubrings, RestrictionsPassAxioms) {
    for (const auto& r : oracle::complete_corpus())
        for (const auto& s : enumerate_standard_subrings(r)) {
            auto sub = restrict_to(r, s);
            EXPECT_TRUE(check_axioms(sub).all_pass()) << r.name();
            EXPECT_EQ(sub.dimension(), s.hopf_dimension);
        }
}

TEST(EnumerateSubrings, FragmentIncludes30And75) {
    auto r = proof_fragment_ring();
    EXPECT_THROW(enumerate_standard_subrings(r), PreconditionUnmet);
    SubringEnumerationOptions opt;
    opt.allow_incomplete = true;
    auto d = dims(enumerate_standard_subrings(r, opt));
    EXPECT_NE(std::find(d.begin(), d.end(), 30), d.end());
    EXPECT_NE(std::find(d.begin(), d.end(), 75), d.end());
}

TEST(EnumerateSubrings, RankBound) {
    SubringEnumerationOptions opt;
    opt.max_rank = 4;
    EXPECT_THROW(enumerate_standard_subrings(cyclic_group_ring(5), opt), RankTooLarge);
    opt.max_rank = 20;
    opt.power_set = true;
    EXPECT_THROW(enumerate_standard_subrings(cyclic_group_ring(13), opt), RankTooLarge);
}

TEST(Freeness, CyclicAndA4HaveNoViolations) {
    EXPECT_TRUE(freeness_obstructions(cyclic_group_ring(6)).empty());
    EXPECT_TRUE(freeness_obstructions(oracle::table_ring("a4")).empty());
    for (const auto& r : oracle::complete_corpus()) EXPECT_TRUE(freeness_obstructions(r).empty()) << r.name();
}

TEST(Freeness, FragmentViolation30In75) {
    auto r = proof_fragment_ring();
    auto v = freeness_obstructions(r);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].inner.hopf_dimension, 30);
    EXPECT_EQ(v[0].outer.hopf_dimension, 75);
}

TEST(Freeness, NestedPairsNotOnlyAmbient) {
    // Supplied list without the ambient ring still finds the nested pair.
    auto r = proof_fragment_ring();
    auto v = freeness_obstructions(r, {closed(r, {"x5"}), closed(r, {"x3"}), closed(r, {"g"})});
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].inner.hopf_dimension, 30);
}

TEST(GrouplikeGroupTest, Z3Orders) {
    auto g = grouplike_group(cyclic_group_ring(3));
    EXPECT_EQ(g.size(), 3u);
    EXPECT_EQ(g.orders, (std::vector<std::size_t>{1, 3, 3}));
}

TEST(GrouplikeGroupTest, F21IsCyclicOfOrder3) {
    auto r = oracle::table_ring("f21");
    auto g = grouplike_group(r);
    EXPECT_EQ(g.size(), 3u);
    EXPECT_EQ(g.order_of(r.index_of("s")), 3u);
}

TEST(GrouplikeGroupTest, So3IsTrivial) {
    auto g = grouplike_group(so3_truncated(9));
    EXPECT_EQ(g.size(), 1u);
    EXPECT_EQ(g.orders, std::vector<std::size_t>{1});
}

TEST(GrouplikeGroupTest, LagrangeOnCorpus) {
    for (const auto& r : oracle::complete_corpus()) {
        auto g = grouplike_group(r);
        for (auto o : g.orders) EXPECT_EQ(g.size() % o, 0u) << r.name();
        EXPECT_EQ(r.dimension() % static_cast<Coeff>(g.size()), 0) << r.name();
    }
}

TEST(GrouplikeGroupTest, NotClosedDetected) {
    auto z3 = cyclic_group_ring(3);
    auto s3 = oracle::table_ring("s3");
    // Grouplike product that leaves the grouplikes.
    auto bad = s3.with_product(s3.index_of("sgn"), s3.index_of("sgn"), RingElement::basic(s3.index_of("x2")));
    EXPECT_THROW(grouplike_group(bad), NotClosed);
    (void)z3;
}

TEST(StabilizerGroup, Examples) {
    auto f21 = oracle::table_ring("f21");
    EXPECT_EQ(stabilizer_group(f21, "1").size(), 1u);
    auto st = stabilizer_group(f21, "x3");
    EXPECT_EQ(st.size(), 3u);
    auto frag = proof_fragment_ring();
    auto v = stabilizer_group(frag, "x5");
    std::vector<std::string> labels;
    for (Index i : v.elements) labels.push_back(frag.label(i));
    EXPECT_EQ(labels, (std::vector<std::string>{"1", "g", "h1", "h2", "h3"}));
    EXPECT_EQ(v.orders, (std::vector<std::size_t>{1, 5, 5, 5, 5}));
}

TEST(StabilizerGroup, UnknownProductThrows) {
    auto frag = proof_fragment_ring();
    // g * x5 is Known, but x3 * g is not; stabilizer uses g * x.
    EXPECT_NO_THROW(stabilizer_group(frag, "x3"));
    auto r = FusionRingBuilder("t")
                 .basis("1", 1, "1")
                 .basis("a", 1, "a")
                 .basis("x", 3, "x")
                 .unit("1")
                 .partial(true)
                 .product("a", "a", {{"1", 1}})
                 .build();
    EXPECT_THROW(stabilizer_group(r, "x"), UnknownProduct);
}
