#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace fusionring;

namespace {

RingSearchOptions opts(Coeff max_mult = 2, unsigned threads = 1) {
    RingSearchOptions o;
    o.max_mult = max_mult;
    o.threads = threads;
    return o;
}

bool contains_isomorphic(const std::vector<FusionRing>& found, const FusionRing& want) {
    for (const auto& r : found)
        if (oracle::isomorphic(r, want)) return true;
    return false;
}

} // namespace

TEST(EnumerateRings, ThreeGrouplikesGiveOnlyZ3) {
    auto found = enumerate_rings({1, 1, 1}, opts());
    ASSERT_EQ(found.size(), oracle::group_count(3));
    EXPECT_TRUE(oracle::isomorphic(found[0], cyclic_group_ring(3)));
}

TEST(EnumerateRings, FourGrouplikesMatchGroupCount) {
    auto found = enumerate_rings({1, 1, 1, 1}, opts());
    EXPECT_EQ(found.size(), oracle::group_count(4));
    EXPECT_TRUE(contains_isomorphic(found, cyclic_group_ring(4)));
    auto v4 = char_table_ring(parse_character_table(
        "group V4 4\nclass 1\nclass 1\nclass 1\nclass 1\n"
        "char 1 1 1 1 1\nchar 1 1 1 -1 -1\nchar 1 1 -1 1 -1\nchar 1 1 -1 -1 1\n"));
    EXPECT_TRUE(contains_isomorphic(found, v4));
}

TEST(EnumerateRings, A4Appears) {
    auto found = enumerate_rings({1, 1, 1, 3}, opts());
    EXPECT_TRUE(contains_isomorphic(found, oracle::table_ring("a4")));
    for (const auto& r : found) {
        EXPECT_TRUE(check_axioms(r).all_pass());
        EXPECT_EQ(r.dimension(), 12);
    }
}

TEST(EnumerateRings, NoRingOnOneAndThree) {
    // x3 x3 = 1 + k x3 has degree 1 + 3k, never 9.
    EXPECT_TRUE(enumerate_rings({1, 3}, opts()).empty());
}

TEST(EnumerateRings, EmittedRingsPairwiseNonIsomorphic) {
    auto found = enumerate_rings({1, 1, 1, 3, 3}, opts());
    for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = i + 1; j < found.size(); ++j) EXPECT_FALSE(oracle::isomorphic(found[i], found[j]));
}

TEST(EnumerateRings, DeterministicAcrossThreadCounts) {
    auto one = enumerate_rings({1, 1, 1, 3, 3}, opts(2, 1));
    auto four = enumerate_rings({1, 1, 1, 3, 3}, opts(2, 4));
    ASSERT_EQ(one.size(), four.size());
    for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(one[i], four[i]);
}

TEST(EnumerateRings, Bounds) {
    EXPECT_THROW(enumerate_rings({1, 1, 1, 1, 1, 1, 1}, opts()), RankTooLarge);
    EXPECT_THROW(enumerate_rings({1, 2}, opts()), InvalidArgument);
    EXPECT_THROW(enumerate_rings({3, 3}, opts()), InvalidArgument);
    EXPECT_THROW(enumerate_rings({1, 0}, opts()), InvalidArgument);
}

TEST(EnumerateRings, MaxMultOneFindsGroups) {
    EXPECT_EQ(enumerate_rings({1, 1, 1}, opts(1)).size(), 1u);
}

TEST(CanonicalEncoding, InvariantUnderRelabeling) {
    // Z4 with the order-2 element listed first among the grouplikes.
    auto z4 = cyclic_group_ring(4);
    const std::map<std::string, std::string> to = {{"1", "1"}, {"g", "b"}, {"g2", "a"}, {"g3", "c"}};
    FusionRingBuilder b("Z4");
    for (const auto& e : z4.basis()) b.basis(to.at(e.label), e.degree, to.at(z4.label(z4.dual_index(z4.index_of(e.label)))));
    b.unit("1");
    for (Index x = 0; x < 4; ++x)
        for (Index y = 0; y < 4; ++y) {
            FusionRingBuilder::Terms t;
            for (const auto& [c, m] : z4.product(x, y)->terms()) t.emplace_back(to.at(z4.label(c)), m);
            b.product(to.at(z4.label(x)), to.at(z4.label(y)), t);
        }
    auto relabeled = b.build();
    EXPECT_NE(oracle::dense(z4), oracle::dense(relabeled));
    EXPECT_EQ(canonical_encoding(z4), canonical_encoding(relabeled));
    EXPECT_TRUE(oracle::isomorphic(z4, relabeled));
    EXPECT_NE(canonical_encoding(z4), canonical_encoding(cyclic_group_ring(2)));
}
