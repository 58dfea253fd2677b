#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rademacher/constructions.hpp"
#include "rademacher/counting.hpp"
#include "rademacher/covering.hpp"
#include "rademacher/formulas.hpp"

using namespace rademacher;
using namespace rademacher::build;
using formulas::turan_edge_count;

namespace {

std::int64_t edges(const Construction& c) { return static_cast<std::int64_t>(edge_count(c.graph)); }
std::int64_t kk(const Construction& c, std::size_t k) { return static_cast<std::int64_t>(count_cliques(c.graph, k).value); }

}  // namespace

TEST(Constructions, MultipartiteAndTuran) {
    EXPECT_EQ(edges(complete_multipartite(PartVector{5, 5})), 25);
    EXPECT_EQ(edges(complete_multipartite(PartVector{4, 3, 3})), 33);
    EXPECT_EQ(complete_multipartite(PartVector{1, 1, 1}).graph, complete_graph(3));
    EXPECT_EQ(turan_graph(10, 2).graph, complete_multipartite(PartVector{5, 5}).graph);
    EXPECT_EQ(turan_graph(13, 3).spec.parts, PartVector({5, 4, 4}));
    EXPECT_EQ(kk(turan_graph(12, 3), 4), 0);
    EXPECT_EQ(kk(turan_graph(12, 3), 3), 64);
}

TEST(Constructions, PartIndexing) {
    const PartVector x{5, 4, 3};
    EXPECT_EQ(part_start(x, 0), 0u);
    EXPECT_EQ(part_start(x, 2), 9u);
    EXPECT_EQ(part_of(x, 4), 0u);
    EXPECT_EQ(part_of(x, 5), 1u);
    EXPECT_EQ(part_of(x, 11), 2u);
}

TEST(Constructions, BmExamples) {
    const auto a = bm_graph(100, 2, 1);
    EXPECT_EQ(edges(a), 2501);
    EXPECT_EQ(kk(a, 3), 98);
    EXPECT_EQ(cover::covering_number(a.graph, complete_graph(3)).tau, 2u);
    EXPECT_EQ(kk(bm_graph(100, 10, 1), 3), 470);
    EXPECT_EQ(kk(bm_graph(101, 2, 1), 3), 99);
    EXPECT_TRUE(side_condition_holds(a.spec));
    EXPECT_TRUE(added_is_matching(a.spec));
}

TEST(Constructions, BsExamples) {
    const auto a = bs_graph(100, 4, 1);
    EXPECT_EQ(kk(a, 3), 194);
    EXPECT_EQ(edges(a), turan_edge_count(100, 2) + 1);
    EXPECT_EQ(cover::covering_number(a.graph, complete_graph(3)).tau, 4u);
    EXPECT_EQ(kk(bs_graph(100, 5, 1), 3), kk(bm_graph(100, 5, 1), 3) + 4);
}

TEST(Constructions, FactIdentitiesOnAGrid) {
    for (std::int64_t n = 27; n <= 62; n += 7)
        for (std::int64_t s = 2; s <= 6; ++s)
            for (std::int64_t t = 1; t < s; ++t) {
                const auto bm = bm_graph(n, s, t);
                const auto bs = bs_graph(n, s, t);
                const auto p = formulas::triangle_params(n, s, t);
                EXPECT_EQ(edges(bm), turan_edge_count(n, 2) + t);
                EXPECT_EQ(edges(bs), turan_edge_count(n, 2) + t);
                EXPECT_EQ(kk(bm, 3), s * p.n_minus - p.m_st);
                EXPECT_EQ(kk(bs, 3), kk(bm, 3) + formulas::surplus(n, s, t));
                EXPECT_TRUE(side_condition_holds(bm.spec));
                EXPECT_TRUE(side_condition_holds(bs.spec));
            }
}

TEST(Constructions, BmRefusesSmallN) {
    try {
        bm_graph(8, 6, 1);
        FAIL() << "expected refusal";
    } catch (const InfeasibleConstruction& e) {
        EXPECT_NE(std::string(e.what()).find("n+"), std::string::npos);
    }
}

TEST(Constructions, KmGraph) {
    const auto a = km_graph(PartVector{5, 4, 3}, 0, 1);
    EXPECT_EQ(kk(a, 4), 12);
    EXPECT_EQ(static_cast<std::uint64_t>(kk(a, 4)), oracles::cliques(a.graph, 4));
    // The matching needs 2s distinct vertices of V_1, so (5,4,3) carries at most two pairs.
    EXPECT_THROW(km_graph(formulas::y_vector(12, 4), 0, 3), InfeasibleConstruction);
    EXPECT_THROW(km_graph(formulas::y_vector(13, 4), 1, 3), InfeasibleConstruction);
    const auto b = km_graph(PartVector{6, 4, 3}, 0, 3);
    EXPECT_EQ(edges(b), PartVector({6, 4, 3}).cross_pairs() + 3);
    EXPECT_EQ(kk(b, 4), 36);
    const auto c = km_graph(PartVector{6, 4, 4}, 1, 3);
    EXPECT_EQ(edges(c), PartVector({6, 4, 4}).cross_pairs() + 2);
    EXPECT_EQ(kk(c, 4), 3 * 16 - 4);
    EXPECT_THROW(km_graph(PartVector{6, 4, 4}, 3, 3), InfeasibleConstruction);
}

TEST(Constructions, KmSpecial) {
    for (std::int64_t s = 4; s <= 6; ++s) {
        const auto a = km_special(30, 4, s, s - 3);
        EXPECT_EQ(a.spec.parts, PartVector({12, 9, 9}));
        EXPECT_EQ(kk(a, 4), 81 * s);
        EXPECT_EQ(edges(a) - turan_edge_count(30, 3), s - 3);
    }
    EXPECT_EQ(cover::covering_number(km_special(30, 4, 5, 2).graph, complete_graph(4)).tau, 5u);
    // n+ = 12 leaves room for six matching pairs, not eleven.
    EXPECT_THROW(km_special(30, 4, 11, 8), InfeasibleConstruction);
    try {
        km_special(12, 4, 11, 1);
        FAIL() << "expected refusal";
    } catch (const InfeasibleConstruction& e) {
        EXPECT_NE(std::string(e.what()).find("radicand R_k^2 = 30"), std::string::npos) << e.what();
    }
}

TEST(Constructions, TBox) {
    EXPECT_EQ(kk(t_box(12, 4), 4), 24);
    EXPECT_EQ(kk(t_box(13, 4), 4), 28);
    for (std::int64_t n = 12; n <= 40; ++n) {
        const auto c = t_box(n, 4);
        EXPECT_EQ(edges(c), turan_edge_count(n, 3) + 1);
        EXPECT_EQ(kk(c, 4), formulas::conjecture2_bound(n, 4));
    }
}

TEST(Constructions, TuranPlusMatching) {
    const auto c = turan_plus_matching(12, 2, 3);
    EXPECT_EQ(edges(c), 36 + 3);
    EXPECT_EQ(kk(c, 3), 18);
}

TEST(Constructions, EnumerateBmPatterns) {
    EXPECT_EQ(enumerate_bm_patterns(20, 5, 1, 100).size(), 1u);
    const auto all = enumerate_bm_patterns(14, 4, 1, 500);
    ASSERT_FALSE(all.empty());
    const auto p = formulas::triangle_params(14, 4, 1);
    for (const auto& c : all) {
        EXPECT_EQ(edges(c), turan_edge_count(14, 2) + 1);
        EXPECT_EQ(kk(c, 3), 4 * p.n_minus - p.m_st);
        EXPECT_TRUE(side_condition_holds(c.spec));
    }
    for (std::size_t i = 0; i < std::min<std::size_t>(all.size(), 20); ++i)
        EXPECT_EQ(cover::covering_number(all[i].graph, complete_graph(3)).tau, 4u);
    EXPECT_EQ(enumerate_bm_patterns(14, 4, 1, 3).size(), 3u);
}

TEST(Constructions, FamilyNamesRoundTrip) {
    for (Family f : {Family::BM, Family::BS, Family::KM, Family::KMSpecial, Family::TBox, Family::Turan,
                     Family::CompleteMultipartite})
        EXPECT_EQ(parse_family(family_name(f)), f);
    EXPECT_THROW(parse_family("nope"), std::invalid_argument);
}

TEST(Constructions, SpecJson) {
    const auto j = to_json(bm_graph(20, 3, 1).spec);
    EXPECT_EQ(j.at("family"), "bm");
    EXPECT_EQ(j.at("parts").size(), 2u);
    EXPECT_EQ(j.at("added").size(), 3u);
}
