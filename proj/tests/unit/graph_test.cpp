#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rademacher/constructions.hpp"
#include "rademacher/graph.hpp"
#include "rademacher/graph6.hpp"

using namespace rademacher;

TEST(Graph, EdgeCountsOfSmallFamilies) {
    EXPECT_EQ(edge_count(complete_graph(4)), 6u);
    EXPECT_EQ(edge_count(empty_graph(7)), 0u);
    EXPECT_EQ(edge_count(build::turan_graph(10, 2).graph), 25u);
    EXPECT_EQ(edge_count(petersen_graph()), 15u);
    EXPECT_EQ(edge_count(cycle_graph(6)), 6u);
    EXPECT_EQ(edge_count(path_graph(6)), 5u);
}

TEST(Graph, RejectsLoopsAndOutOfRange) {
    Graph g(4);
    EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 4), std::invalid_argument);
    EXPECT_THROW(g.remove_edge(5, 1), std::invalid_argument);
}

TEST(Graph, SymmetricAndIrreflexive) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const Graph g = oracles::random_graph(70, 0.3, rng);
        std::size_t row_sum = 0;
        for (Vertex u = 0; u < g.order(); ++u) {
            EXPECT_FALSE(g.adjacent(u, u));
            row_sum += g.degree(u);
            for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
        }
        EXPECT_EQ(row_sum, 2 * edge_count(g));
        EXPECT_EQ(edge_count(g), oracles::edges_by_pairs(g));
    }
}

TEST(Graph, AddRemoveRoundTrip) {
    Graph g(130);
    g.add_edge(3, 129);
    g.add_edge(64, 63);
    EXPECT_TRUE(g.adjacent(129, 3));
    EXPECT_EQ(edge_count(g), 2u);
    g.remove_edge(3, 129);
    EXPECT_FALSE(g.adjacent(3, 129));
    EXPECT_EQ(g.neighbors(63), std::vector<Vertex>{64});
    EXPECT_EQ(g.without_edge(63, 64), Graph(130));
}

TEST(Graph, RelabelingMovesEdges) {
    const Graph p = path_graph(3);  // 0-1-2
    const std::vector<Vertex> perm{2, 0, 1};
    const Graph q = p.relabeled(perm);
    EXPECT_TRUE(q.adjacent(2, 0));
    EXPECT_TRUE(q.adjacent(0, 1));
    EXPECT_FALSE(q.adjacent(2, 1));
}

TEST(Graph6, KnownEncodings) {
    EXPECT_EQ(to_graph6(Graph(0)), "?");
    EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
    EXPECT_EQ(to_graph6(complete_graph(5)), "D~{");
    EXPECT_EQ(to_graph6(petersen_graph()).size(), 9u);
}

TEST(Graph6, LongOrderField) {
    for (std::size_t n : {62u, 63u, 64u, 200u}) {
        Graph g(n);
        g.add_edge(0, static_cast<Vertex>(n - 1));
        const std::string s = to_graph6(g);
        EXPECT_EQ(from_graph6(s), g) << n;
    }
}

TEST(Graph6, HeaderAndWhitespaceAccepted) {
    EXPECT_EQ(from_graph6(">>graph6<<Bw\n"), complete_graph(3));
    EXPECT_EQ(read_graph6_lines("Bw\n\nD~{\n").size(), 2u);
}

TEST(Graph6, MalformedInputRejected) {
    EXPECT_THROW(from_graph6(""), Graph6Error);
    EXPECT_THROW(from_graph6("B"), Graph6Error);       // missing data
    EXPECT_THROW(from_graph6("Bx"), Graph6Error);      // nonzero padding bit
    EXPECT_THROW(from_graph6("Bww"), Graph6Error);     // trailing data
    EXPECT_THROW(from_graph6("B\x01"), Graph6Error);   // byte below 63
    EXPECT_THROW(from_graph6("~??B?"), Graph6Error);   // long field for a short order
}

TEST(Graph6, RandomRoundTrip) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = static_cast<std::size_t>(rng() % 80);
        const Graph g = oracles::random_graph(n, 0.4, rng);
        const std::string s = to_graph6(g);
        EXPECT_EQ(from_graph6(s), g);
        EXPECT_EQ(to_graph6(from_graph6(s)), s);
    }
}
