#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rademacher/constructions.hpp"
#include "rademacher/counting.hpp"
#include "rademacher/covering.hpp"
#include "rademacher/critical.hpp"
#include "rademacher/fg.hpp"
#include "rademacher/formulas.hpp"
#include "rademacher/graph6.hpp"
#include "rademacher/opt.hpp"
#include "rademacher/search.hpp"
#include "rademacher/sweep.hpp"

using namespace rademacher;
using namespace rademacher::oracle;
using formulas::Parity;

namespace {

SearchReport search(std::size_t n, std::size_t e, std::size_t s, unsigned workers = 2) {
    SearchParams p;
    p.n = n;
    p.e = e;
    p.s = s;
    p.workers = workers;
    return brute_min_cliques(p);
}

}  // namespace

TEST(Search, Examples) {
    const auto a = search(6, 10, 1);
    ASSERT_TRUE(a.minimum.has_value());
    EXPECT_EQ(a.minimum->value, 3u);
    const auto b = search(6, 10, 2);
    ASSERT_TRUE(b.minimum.has_value());
    EXPECT_EQ(b.minimum->value, 4u);
    const auto c = search(5, 10, 3);
    ASSERT_TRUE(c.minimum.has_value());
    EXPECT_EQ(c.minimum->value, 10u);
    EXPECT_EQ(c.witnesses, std::vector<std::string>{"D~{"});
    EXPECT_FALSE(search(5, 10, 2).minimum.has_value());
}

TEST(Search, MatchesUnprunedOracle) {
    for (std::size_t n = 4; n <= 6; ++n)
        for (std::size_t e = n; e <= n * (n - 1) / 2; e += 2)
            for (std::size_t s = 0; s <= 3; ++s) {
                const auto r = search(n, e, s);
                const auto want = oracles::min_cliques(n, e, 3, s);
                ASSERT_EQ(r.minimum.has_value(), want.has_value()) << n << " " << e << " " << s;
                if (want) {
                    EXPECT_EQ(r.minimum->value, *want) << n << " " << e << " " << s;
                }
            }
}

TEST(Search, WitnessesSatisfyConstraints) {
    const auto r = search(7, 13, 2);
    ASSERT_TRUE(r.minimum.has_value());
    ASSERT_FALSE(r.witnesses.empty());
    EXPECT_TRUE(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
    for (const auto& w : r.witnesses) {
        const Graph g = from_graph6(w);
        EXPECT_EQ(edge_count(g), 13u);
        EXPECT_EQ(count_cliques(g, 3).value, r.minimum->value);
        EXPECT_EQ(cover::covering_number(g, complete_graph(3)).tau, 2u);
        EXPECT_EQ(canonical_graph6(g), w);
    }
}

TEST(Search, DeterministicAcrossWorkerCounts) {
    const auto a = search(7, 12, 2, 1);
    const auto b = search(7, 12, 2, 3);
    EXPECT_EQ(a.minimum, b.minimum);
    EXPECT_EQ(a.witnesses, b.witnesses);
    EXPECT_EQ(a.graphs_scanned, b.graphs_scanned);
    EXPECT_EQ(a.pruned, b.pruned);
    EXPECT_EQ(to_json(a), to_json(b));
}

TEST(Search, Refusals) {
    EXPECT_THROW(search(9, 10, 1), SearchRefused);
    EXPECT_THROW(search(5, 11, 1), SearchRefused);
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % 9);
        const Graph g = oracles::random_graph(n, 0.5, rng);
        const auto perm = oracles::random_permutation(n, rng);
        EXPECT_EQ(canonical_graph6(g), canonical_graph6(g.relabeled(perm)));
        EXPECT_EQ(edge_count(canonical_form(g)), edge_count(g));
    }
    EXPECT_NE(canonical_graph6(path_graph(4)), canonical_graph6(cycle_graph(4)));
}

TEST(Opt, MinTailProductExamples) {
    OptQuery q{12, 4, 3, 2, 0, Objective::A};
    const auto a = opt_enumerate(q);
    ASSERT_TRUE(a.min_tail_product.has_value());
    EXPECT_EQ(*a.min_tail_product, 12);  // q^{k-3}(q-1), q = 4
    q.n = 13;
    const auto b = opt_enumerate(q);
    ASSERT_TRUE(b.min_tail_product.has_value());
    EXPECT_EQ(*b.min_tail_product, 15);  // q^{k-4}(q+1)(q-1)
}

TEST(Opt, ObjectiveAIdentity) {
    for (std::int64_t n = 12; n <= 30; ++n) {
        for (std::int64_t m = 0; m <= 2; ++m) {
            const auto sq = composition_square_sum(n, 5, 4, 1, m);
            for (const auto& x : feasible_compositions(n, 5, sq)) {
                EXPECT_EQ(objective_value(x, 4, m, Objective::A), 4 * x.product(1, 4) - m * x.product(1, 3));
                std::int64_t squares = 0;
                for (auto v : x.sizes()) squares += v * v;
                EXPECT_EQ(squares, sq);
            }
        }
    }
}

TEST(Opt, EnumeratorMatchesDirectMinimum) {
    for (std::int64_t n = 12; n <= 24; ++n) {
        const OptQuery q{n, 4, 5, 2, 1, Objective::D};
        const auto r = opt_enumerate(q);
        const auto all = feasible_compositions(n, 4, r.square_sum);
        EXPECT_EQ(r.feasible, all.size());
        if (all.empty()) {
            EXPECT_FALSE(r.value.has_value());
            continue;
        }
        std::int64_t best = INT64_MAX;
        for (const auto& x : all) best = std::min(best, objective_value(x, 5, 1, Objective::D));
        EXPECT_EQ(r.value, best);
    }
}

TEST(Opt, ClosedFormCases) {
    for (std::int64_t k = 4; k <= 5; ++k)
        for (std::int64_t n = 12; n <= 40; ++n)
            for (std::int64_t m = 0; m <= 1; ++m) {
                const auto r = opt_enumerate({n, k, 2, 1, m, Objective::A});
                ASSERT_TRUE(r.min_tail_product.has_value()) << n << " " << k << " " << m;
                EXPECT_EQ(*r.min_tail_product, closed_form_min_tail_product(n, k, 1 - m)) << n << " " << k << " " << m;
            }
}

TEST(Opt, Refusals) {
    EXPECT_THROW(opt_enumerate({12, 3, 3, 2, 0, Objective::A}), std::invalid_argument);
    EXPECT_THROW(opt_enumerate({12, 4, 3, 2, 2, Objective::A}), std::invalid_argument);
    EXPECT_EQ(parse_objective("D"), Objective::D);
    EXPECT_THROW(parse_objective("C"), std::invalid_argument);
}

TEST(Opt, Monotonicity) {
    const auto c = opt_monotonicity(60, 4, 11, 1);
    EXPECT_EQ(c.ms.size(), c.values.size());
    EXPECT_FALSE(c.ms.empty());
}

TEST(Fg, AllRowsHold) {
    const auto rows = verify_fg(19);
    EXPECT_EQ(rows.size(), 2u * 19 * 18 / 2);
    for (const auto& r : rows) {
        EXPECT_TRUE(r.holds) << r.s << " " << r.t;
        for (auto m : r.g_argmins) {
            EXPECT_GE(m, 0);
            EXPECT_LE(m, r.s - r.t);
            EXPECT_TRUE(formulas::triangle_root(r.s, r.t, r.parity, m).has_value());
        }
    }
}

TEST(Fg, TightPairs) {
    const auto rows = verify_fg(19);
    const std::vector<StPair> even{{2, 1}, {3, 1}, {4, 1}};
    EXPECT_EQ(tight_pairs(rows, Parity::Even), even);
    EXPECT_EQ(published_exceptional_pairs(Parity::Even), even);
    const std::vector<StPair> odd{{3, 1}, {4, 1}, {5, 1}, {6, 1}};
    EXPECT_EQ(tight_pairs(rows, Parity::Odd), odd);
    EXPECT_EQ(non_unique_pairs(rows, Parity::Even).size(), 22u);
    EXPECT_EQ(non_unique_pairs(rows, Parity::Odd).size(), 23u);
}

TEST(Fg, FullValuesAgreeWithOffsets) {
    const auto offsets = verify_fg(19);
    for (std::int64_t n : {1000, 2000, 1001}) {
        const auto full = verify_fg_at(19, n);
        std::size_t j = 0;
        for (const auto& r : offsets) {
            if (r.parity != formulas::parity_of(n)) continue;
            ASSERT_LT(j, full.size());
            EXPECT_EQ(full[j].holds, r.holds);
            EXPECT_EQ(full[j].g_argmins, r.g_argmins);
            EXPECT_EQ(full[j].f_at_mst - r.f_at_mst, r.s * n);
            ++j;
        }
        EXPECT_EQ(j, full.size());
    }
}

TEST(Critical, KTriangle) {
    for (std::int64_t n = 4; n <= 60; ++n) EXPECT_EQ(c_of_nF(n, complete_graph(3)).value.value, static_cast<std::uint64_t>(n / 2));
    EXPECT_EQ(c_of_nF(11, complete_graph(3)).parts, PartVector({6, 5}));
}

TEST(Critical, Multipartite) {
    const std::vector<std::int64_t> a{5, 5};
    EXPECT_EQ(c_multipartite(a, complete_graph(3)).value, 5u);
    const std::vector<std::int64_t> b{4, 3, 3};
    EXPECT_EQ(c_multipartite(b, complete_graph(4)).value, 9u);
    const std::vector<std::int64_t> c{3, 3, 4};
    EXPECT_EQ(c_multipartite(c, complete_graph(4)).value, 12u);
    EXPECT_THROW(c_multipartite(b, complete_graph(3)), std::invalid_argument);
}

TEST(Critical, FiveCycleAgainstOracle) {
    // Both placements of the extra edge in T_2(9), counted by brute force.
    std::uint64_t best = UINT64_MAX;
    for (Vertex v : {Vertex{0}, Vertex{5}}) {
        Graph g = build::turan_graph(9, 2).graph;
        g.add_edge(v, v + 1);
        best = std::min(best, oracles::copies(g, cycle_graph(5)));
    }
    const auto r = c_of_nF(9, cycle_graph(5));
    EXPECT_EQ(r.value.value, best);
    EXPECT_EQ(r.value.value, 36u);
}

TEST(Critical, RejectsNonCritical) {
    EXPECT_THROW(c_of_nF(10, cycle_graph(4)), PatternNotCritical);
    EXPECT_THROW(c_of_nF(10, petersen_graph()), PatternNotCritical);
}

TEST(Sweep, FactSmallGrid) {
    SweepGrid g;
    g.n = {20, 30, 5};
    g.s = {2, 5, 1};
    g.tau_ns = {20};
    const auto r = theorem_sweep(Target::Fact, g);
    EXPECT_TRUE(r.ok());
    EXPECT_GT(r.count(RowStatus::Pass), 0u);
    EXPECT_EQ(r.count(RowStatus::Fail), 0u);
}

TEST(Sweep, InfeasiblePointsAreRecorded) {
    SweepGrid g;
    g.n = IntRange::single(8);
    g.s = {2, 6, 1};
    const auto r = theorem_sweep(Target::Theorem1, g);
    EXPECT_GT(r.count(RowStatus::Infeasible), 0u);
    EXPECT_EQ(r.count(RowStatus::Fail), 0u);
}

TEST(Sweep, DeterministicAcrossWorkers) {
    SweepGrid g;
    g.n = {12, 30, 1};
    g.s = {2, 4, 1};
    g.workers = 1;
    const auto a = theorem_sweep(Target::Theorem2, g);
    g.workers = 4;
    const auto b = theorem_sweep(Target::Theorem2, g);
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) EXPECT_EQ(a.rows[i].values, b.rows[i].values);
    EXPECT_EQ(a.summary, b.summary);
}

TEST(Sweep, RangeValues) {
    EXPECT_EQ((IntRange{12, 20, 3}.values()), (std::vector<std::int64_t>{12, 15, 18}));
    EXPECT_EQ(IntRange::single(4).values(), std::vector<std::int64_t>{4});
    EXPECT_EQ(parse_target(target_name(Target::Conjectures)), Target::Conjectures);
    EXPECT_THROW(parse_target("theorem9"), std::invalid_argument);
}
