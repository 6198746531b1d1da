#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace fusionring;

// ---------------------------------------------------------------------------
// Cyclotomic arithmetic

TEST(Cyclotomic, RelationsOfRootsOfUnity) {
    // 1 + z + z^2 = 0 in Z[zeta_3]
    auto s = *parse_cyclotomic("1+z+z^2", 3);
    EXPECT_EQ(s.as_integer(), 0);
    // z^7 = z^2 in conductor 5
    EXPECT_EQ(*parse_cyclotomic("z^7", 5), *parse_cyclotomic("z^2", 5));
    // |eta|^2 = 2 for eta = zeta_7 + zeta_7^2 + zeta_7^4
    auto eta = *parse_cyclotomic("z^3+z^6+z^12", 21);
    EXPECT_EQ((eta * eta.conj()).as_integer(), 2);
    EXPECT_EQ((eta + eta.conj()).as_integer(), -1);
}

TEST(Cyclotomic, PolynomialsMatchKnownValues) {
    EXPECT_EQ(cyclotomic_polynomial(1), (Poly{-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), (Poly{1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), (Poly{1, 0, -1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(21).size(), 13u); // phi(21) = 12
}

TEST(Cyclotomic, ParseErrors) {
    std::size_t off = 99;
    EXPECT_FALSE(parse_cyclotomic("", 3, &off));
    EXPECT_FALSE(parse_cyclotomic("2*", 3, &off));
    EXPECT_FALSE(parse_cyclotomic("z^", 3, &off));
    EXPECT_FALSE(parse_cyclotomic("1 z", 3, &off));
    EXPECT_FALSE(parse_cyclotomic("y", 3, &off));
    EXPECT_TRUE(parse_cyclotomic("-2*z^2+3", 3));
    EXPECT_TRUE(parse_cyclotomic("0", 3));
}

// ---------------------------------------------------------------------------
// Character tables

TEST(CharTable, A4MatchesFloatingPointInnerProducts) {
    auto r = oracle::table_ring("a4");
    auto t = oracle::numeric_a4();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                EXPECT_EQ((*r.product(r.index_of(t.labels[i]), r.index_of(t.labels[j])))[r.index_of(t.labels[k])],
                          oracle::inner_product(t, i, j, k));
    EXPECT_EQ(decompose(r, *r.product(r.index_of("x3"), r.index_of("x3"))),
              (Decomposition{{"1", 1}, {"s", 1}, {"s2", 1}, {"x3", 2}}));
}

TEST(CharTable, S3MatchesFloatingPointInnerProducts) {
    auto r = oracle::table_ring("s3");
    auto t = oracle::numeric_s3();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                EXPECT_EQ((*r.product(r.index_of(t.labels[i]), r.index_of(t.labels[j])))[r.index_of(t.labels[k])],
                          oracle::inner_product(t, i, j, k));
    EXPECT_TRUE(r.has_even_degree());
}

TEST(CharTable, F21MatchesFloatingPointInnerProducts) {
    auto r = oracle::table_ring("f21");
    auto t = oracle::numeric_f21();
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            for (std::size_t k = 0; k < 5; ++k)
                EXPECT_EQ((*r.product(r.index_of(t.labels[i]), r.index_of(t.labels[j])))[r.index_of(t.labels[k])],
                          oracle::inner_product(t, i, j, k));
}

TEST(CharTable, CyclicTablesMatchGroupRings) {
    EXPECT_EQ(oracle::table_ring("z3").with_name("Z3"), cyclic_group_ring(3));
    EXPECT_EQ(oracle::table_ring("z5").with_name("Z5"), cyclic_group_ring(5));
}

TEST(CharTable, DualPairingFollowsConjugation) {
    for (const char* name : {"z3", "z5", "s3", "a4", "f21"}) {
        auto t = parse_character_table(oracle::read_fixture(std::string("chartables/") + name + ".tbl"));
        auto r = char_table_ring(t);
        for (std::size_t i = 0; i < t.characters.size(); ++i)
            for (std::size_t j = 0; j < t.characters.size(); ++j) {
                Coeff m = (*r.product(r.index_of(t.characters[i].label), r.index_of(t.characters[j].label)))[r.unit()];
                EXPECT_EQ(m, j == t.conjugate[i] ? 1 : 0) << name;
            }
    }
}

TEST(CharTable, OrthogonalityFailure) {
    auto text = oracle::read_fixture("chartables/s3.tbl");
    text.replace(text.find("char 2 2 0 -1"), 13, "char 2 2 1 -1");
    EXPECT_THROW(parse_character_table(text), OrthogonalityFailure);
}

TEST(CharTable, KleinFourIsAccepted) {
    auto r = char_table_ring(parse_character_table(
        "group V4 4\nclass 1\nclass 1\nclass 1\nclass 1\n"
        "char 1 1 1 1 1\nchar 1 1 1 -1 -1\nchar 1 1 -1 1 -1\nchar 1 1 -1 -1 1\n"));
    EXPECT_TRUE(check_axioms(r).all_pass());
    EXPECT_EQ(grouplike_group(r).orders, (std::vector<std::size_t>{1, 2, 2, 2}));
}

TEST(CharTable, NegativeMultiplicityIsNotIntegral) {
    // Orthonormal rows that are not characters: <a a, a> = -1.
    const char* text = "group fake 12\nclass 1\nclass 2\nclass 3\nclass 6\n"
                       "char 1 1 1 1 1\nchar 1 1 -2 1 0\nchar 1 1 1 1 -1\nchar 3 3 0 -1 0\n";
    auto t = parse_character_table(text);
    EXPECT_THROW(char_table_ring(t), NotIntegral);
}

TEST(CharTable, ConjugationMismatch) {
    auto text = oracle::read_fixture("chartables/z3.tbl");
    text.replace(text.find("dualpair 1 2"), 12, "");
    EXPECT_THROW(parse_character_table(text), SemanticError);
}

TEST(CharTable, ParseErrorsCarryPosition) {
    try {
        parse_character_table("group G 1\nclass 1\nchar 1 1+\n");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 8u + 2u);
    }
    EXPECT_THROW(parse_character_table("group G 1\nbogus 1\n"), SyntaxError);
    EXPECT_THROW(parse_character_table("class 1\nchar 1 1\n"), SemanticError);
    EXPECT_THROW(parse_character_table("group G 2\nclass 1\nchar 1 1\n"), SemanticError);
}

// ---------------------------------------------------------------------------
// Generators

TEST(Cyclic, Basics) {
    auto z1 = cyclic_group_ring(1);
    EXPECT_EQ(z1.rank(), 1u);
    EXPECT_TRUE(check_axioms(z1).all_pass());
    auto z3 = cyclic_group_ring(3);
    EXPECT_EQ(grouplike_group(z3).orders, (std::vector<std::size_t>{1, 3, 3}));
    EXPECT_THROW(cyclic_group_ring(0), InvalidArgument);
}

TEST(So3, TruncationAndClebschGordan) {
    auto r3 = so3_truncated(3);
    EXPECT_FALSE(r3.product(r3.index_of("x3"), r3.index_of("x3")).has_value());
    auto r5 = so3_truncated(5);
    EXPECT_EQ(decompose(r5, *r5.product(r5.index_of("x3"), r5.index_of("x3"))),
              (Decomposition{{"1", 1}, {"x3", 1}, {"x5", 1}}));
    auto r9 = so3_truncated(9);
    EXPECT_EQ(decompose(r9, *r9.product(r9.index_of("x5"), r9.index_of("x5"))),
              (Decomposition{{"1", 1}, {"x3", 1}, {"x5", 1}, {"x7", 1}, {"x9", 1}}));
    EXPECT_EQ(r9.truncation(), 9);
    EXPECT_THROW(so3_truncated(4), InvalidArgument);
    EXPECT_THROW(so3_truncated(1), InvalidArgument);
}

TEST(So3, KnownProductsMatchWeightOracle) {
    auto r = so3_truncated(15);
    for (Index a = 0; a < r.rank(); ++a)
        for (Index b = 0; b < r.rank(); ++b) {
            const auto& p = r.product(a, b);
            auto cg = oracle::clebsch_gordan(r.degree(a), r.degree(b));
            const bool fits = cg.rbegin()->first <= 15;
            EXPECT_EQ(p.has_value(), fits);
            if (!p) continue;
            Decomposition want;
            for (const auto& [d, m] : cg) want.emplace_back(so3_label(d), m);
            EXPECT_EQ(decompose(r, *p), want);
        }
    EXPECT_EQ(r.degree_sum_mismatch(), std::nullopt);
}

TEST(Fragment, StructureAsDescribed) {
    auto r = proof_fragment_ring();
    EXPECT_EQ(r.rank(), 11u);
    EXPECT_EQ(r.of_degree(1).size(), 5u);
    EXPECT_EQ(r.of_degree(3).size(), 5u);
    EXPECT_EQ(r.of_degree(5).size(), 1u);
    EXPECT_EQ(r.dimension(), 75);
    auto el = [&](const std::string& l) { return element_from_basis(r, l); };
    auto mul = [&](const std::string& a, const std::string& b) { return *multiply(r, el(a), el(b)); };
    EXPECT_EQ(mul("x3", "x3"), el("1") + el("x3") + el("x5"));
    EXPECT_EQ(mul("x5", "x3"), el("x3") + el("gx3") + el("h1x3") + el("h2x3") + el("h3x3"));
    EXPECT_EQ(mul("x5", "x5"), 4 * el("x5") + el("1") + el("g") + el("h1") + el("h2") + el("h3"));
    EXPECT_EQ(grouplike_group(r).orders, (std::vector<std::size_t>{1, 5, 5, 5, 5}));
    EXPECT_FALSE(r.product(r.index_of("x3"), r.index_of("g")).has_value());
    EXPECT_FALSE(check_axioms(r).any_fail());
}

// ---------------------------------------------------------------------------
// Spec format

TEST(Spec, Z3FromText) {
    const char* text = R"(# cyclic group of order 3
ring Z3
basis 1 1 1
basis g 1 g2
basis g2 1 g
unit 1
prod 1 1 : 1 1
prod 1 g : g 1
prod 1 g2 : g2 1
prod g 1 : g 1
prod g g : g2 1
prod g g2 : 1 1
prod g2 1 : g2 1
prod g2 g : 1 1
prod g2 g2 : g 1
)";
    auto r = parse_spec(text);
    EXPECT_TRUE(check_axioms(r).all_pass());
    EXPECT_EQ(r, cyclic_group_ring(3));
}

TEST(Spec, DanglingDual) {
    EXPECT_THROW(parse_spec("ring t\nbasis 1 1 1\nbasis a 3 b\nunit 1\n"), SemanticError);
}

TEST(Spec, DuplicateProduct) {
    EXPECT_THROW(parse_spec("ring t\npartial true\nbasis 1 1 1\nbasis a 1 a\nunit 1\nprod a a : 1 1\nprod a a : 1 1\n"),
                 SemanticError);
}

TEST(Spec, DegreeSumMismatch) {
    EXPECT_THROW(parse_spec("ring t\nbasis 1 1 1\nbasis a 1 a\nunit 1\nprod a a : 1 2\n"), SemanticError);
}

TEST(Spec, MissingProductInCompleteRing) {
    EXPECT_THROW(parse_spec("ring t\nbasis 1 1 1\nbasis a 1 a\nunit 1\n"), SemanticError);
    EXPECT_NO_THROW(parse_spec("ring t\npartial true\nbasis 1 1 1\nbasis a 1 a\nunit 1\n"));
}

TEST(Spec, SyntaxErrorsCarryLineAndColumn) {
    auto expect_at = [](const std::string& text, std::size_t line, std::size_t col) {
        try {
            parse_spec(text);
            ADD_FAILURE() << "no error for: " << text;
        } catch (const SyntaxError& e) {
            EXPECT_EQ(e.line(), line) << e.what();
            EXPECT_EQ(e.column(), col) << e.what();
        }
    };
    expect_at("ring t\nbasis 1 x 1\n", 2, 9);
    expect_at("ring t\n  frobnicate\n", 2, 3);
    expect_at("ring t\nbasis 1 1 1\nunit 1\nprod 1 1 ; 1 1\n", 4, 10);
    expect_at("ring t\nbasis 1 1 1\nunit 1\nprod 1 1 : 1 1 1 1\n", 4, 16);
    expect_at("ring t\npartial maybe\n", 2, 9);
    expect_at("ring t\ntruncation 4\n", 2, 12);
    expect_at("ring t\nbasis a-b 1 1\n", 2, 7);
}

TEST(Spec, RoundTripCorpus) {
    for (const auto& r : oracle::full_corpus()) {
        const auto text = write_spec(r);
        const auto back = parse_spec(text);
        EXPECT_EQ(back, r) << r.name();
        EXPECT_EQ(write_spec(back), text) << r.name();
    }
}

TEST(Spec, RoundTripKeepsUnknownMarkers) {
    auto r = so3_truncated(9);
    auto back = parse_spec(write_spec(r));
    for (Index a = 0; a < r.rank(); ++a)
        for (Index b = 0; b < r.rank(); ++b) EXPECT_EQ(back.product(a, b).has_value(), r.product(a, b).has_value());
}

TEST(Spec, CommentsAndBlankLines) {
    auto r = parse_spec("# header\n\nring t   # name\npartial false\nbasis 1 1 1 # unit\n\nunit 1\n");
    EXPECT_EQ(r.rank(), 1u);
    EXPECT_EQ(r.name(), "t");
}
