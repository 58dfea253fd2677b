#include <gtest/gtest.h>

#include <functional>

#include "rademacher/formulas.hpp"
#include "rademacher/surd.hpp"

using namespace rademacher;
using namespace rademacher::formulas;

TEST(Surd, CanonicalForm) {
    const auto a = QuadraticSurd::sqrt_of(120) / 6;
    const auto b = QuadraticSurd::sqrt_of(30) / 3;
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.radicand(), 30);
    EXPECT_EQ(a.coeff(), 1);
    EXPECT_EQ(a.denom(), 3);
    EXPECT_EQ(QuadraticSurd::sqrt_of(36), QuadraticSurd::integer(6));
    EXPECT_EQ(QuadraticSurd::sqrt_of(9, 4), QuadraticSurd::rational(3, 2));
    EXPECT_EQ(QuadraticSurd::rational(4, -6), QuadraticSurd::rational(-2, 3));
    EXPECT_TRUE(QuadraticSurd::sqrt_of(0).is_integer());
}

TEST(Surd, ExactComparison) {
    const auto r30 = QuadraticSurd::sqrt_of(30);
    EXPECT_LT(QuadraticSurd::integer(5), r30);
    EXPECT_LT(r30, QuadraticSurd::integer(6));
    EXPECT_GT(QuadraticSurd::integer(2) - QuadraticSurd::sqrt_of(3), QuadraticSurd::integer(0));
    EXPECT_LT(QuadraticSurd::integer(1) - QuadraticSurd::sqrt_of(2), QuadraticSurd::integer(0));
    // 7 - 4 sqrt(3) is tiny but positive.
    EXPECT_EQ((QuadraticSurd::integer(7) - QuadraticSurd::integer(4) * QuadraticSurd::sqrt_of(3)).sign(), 1);
    EXPECT_EQ((QuadraticSurd::integer(7) - QuadraticSurd::integer(5) * QuadraticSurd::sqrt_of(2)).sign(), -1);
}

TEST(Surd, Arithmetic) {
    const auto x = QuadraticSurd::integer(1) + QuadraticSurd::sqrt_of(2);
    EXPECT_EQ(x * x, QuadraticSurd::integer(3) + QuadraticSurd::integer(2) * QuadraticSurd::sqrt_of(2));
    EXPECT_EQ(x.pow(2), x * x);
    EXPECT_EQ(QuadraticSurd::sqrt_of(2) * QuadraticSurd::sqrt_of(2), QuadraticSurd::integer(2));
    EXPECT_EQ(-x + x, QuadraticSurd::integer(0));
    EXPECT_THROW(QuadraticSurd::sqrt_of(2) + QuadraticSurd::sqrt_of(3), std::domain_error);
    EXPECT_THROW(QuadraticSurd::sqrt_of(-1), std::domain_error);
    EXPECT_NEAR(QuadraticSurd::sqrt_of(30).to_double(), 5.477225575, 1e-9);
}

TEST(Surd, IntegerRoots) {
    EXPECT_EQ(isqrt(0), 0);
    EXPECT_EQ(isqrt(99), 9);
    EXPECT_EQ(isqrt(100), 10);
    EXPECT_EQ(isqrt(INT64_MAX), 3037000499);
    EXPECT_EQ(exact_sqrt(144), 12);
    EXPECT_FALSE(exact_sqrt(145).has_value());
}

TEST(Formulas, TuranEdgeCount) {
    EXPECT_EQ(turan_edge_count(10, 2), 25);
    EXPECT_EQ(turan_edge_count(10, 3), 33);
    EXPECT_EQ(turan_edge_count(12, 3), 48);
    for (std::int64_t p = 1; p <= 7; ++p)
        for (std::int64_t n = 0; n <= 120; ++n) EXPECT_EQ(turan_edge_count(n, p), turan_edge_count_closed_form(n, p)) << n << " " << p;
}

TEST(Formulas, TriangleParams) {
    for (std::int64_t n : {20, 100}) {
        const auto p = triangle_params(n, 5, 1);
        EXPECT_EQ(p.m_st, 0);
        EXPECT_EQ(p.r3, 4);
        EXPECT_EQ(p.n_minus, (n - 4) / 2);
        EXPECT_EQ(p.n_plus + p.n_minus, n);
    }
    const auto even41 = triangle_params(100, 4, 1);
    EXPECT_EQ(even41.m_st, 2);
    EXPECT_EQ(even41.r3, 2);
    for (std::int64_t n : {21, 101}) {
        const auto p = triangle_params(n, 2, 1);
        EXPECT_EQ(p.m_st, 1);
        EXPECT_EQ(p.r3, 1);
        EXPECT_EQ(triangle_lower_bound(n, 2, 1), n - 2);
    }
    EXPECT_THROW(triangle_params(100, 1, 1), std::invalid_argument);
    EXPECT_THROW(triangle_params(100, 3, 0), std::invalid_argument);
}

TEST(Formulas, RootAndValidRemovals) {
    EXPECT_EQ(triangle_root(4, 1, Parity::Even, 2), 2);
    EXPECT_FALSE(triangle_root(4, 1, Parity::Even, 0).has_value());
    EXPECT_EQ(valid_removals(4, 1, Parity::Even), (std::vector<std::int64_t>{2, 3}));
    EXPECT_EQ(valid_removals(3, 2, Parity::Odd), (std::vector<std::int64_t>{1}));
    EXPECT_EQ(parity_term(10), 0);
    EXPECT_EQ(parity_term(11), 1);
}

TEST(Formulas, Surplus) {
    EXPECT_EQ(surplus(100, 4, 1), 0);
    EXPECT_EQ(surplus(101, 2, 1), 0);
    EXPECT_EQ(surplus(100, 5, 1), 4);
    // Zero exactly on s - t = p^2 - 1 (even) and p(p+1) - 1 (odd).
    for (std::int64_t gap = 1; gap <= 40; ++gap) {
        bool even_zero = false;
        bool odd_zero = false;
        for (std::int64_t p = 1; p <= 7; ++p) {
            even_zero = even_zero || gap == p * p - 1;
            odd_zero = odd_zero || gap == p * (p + 1) - 1;
        }
        EXPECT_EQ(surplus(400, gap + 1, 1) == 0, even_zero) << gap;
        EXPECT_EQ(surplus(401, gap + 1, 1) == 0, odd_zero) << gap;
        EXPECT_GE(surplus(400, gap + 1, 1), 0);
        EXPECT_GE(surplus(401, gap + 1, 1), 0);
    }
}

TEST(Formulas, TriangleBounds) {
    EXPECT_EQ(triangle_lower_bound(100, 2, 1), 98);
    EXPECT_EQ(triangle_lower_bound(100, 10, 1), 470);
    EXPECT_EQ(triangle_lower_bound(101, 2, 1), 99);
    EXPECT_EQ(conjecture1_bound(100, 10, 1), 482);
    EXPECT_EQ(conjecture1_bound(100, 2, 1), 98);
    EXPECT_EQ(conjecture1_bound(101, 2, 1), 99);
}

TEST(Formulas, YVector) {
    EXPECT_EQ(y_vector(12, 4), PartVector({5, 4, 3}));
    EXPECT_EQ(y_vector(13, 4), PartVector({5, 4, 4}));
    EXPECT_EQ(y_vector(14, 4), PartVector({6, 4, 4}));
    for (std::int64_t k = 4; k <= 7; ++k)
        for (std::int64_t n = 2 * k; n <= 60; ++n) EXPECT_EQ(y_vector(n, k).total(), n);
}

TEST(Formulas, MinKkCount) {
    for (std::int64_t s = 2; s <= 8; ++s) {
        EXPECT_EQ(min_kk_count(12, 4, s), 12 * s);
        EXPECT_EQ(min_kk_count(13, 4, s), 16 * s - 4);
        EXPECT_EQ(min_kk_count(14, 4, s), 16 * s);
    }
}

TEST(Formulas, Conjecture2Bound) {
    EXPECT_EQ(conjecture2_bound(12, 4), 24);
    EXPECT_EQ(conjecture2_bound(13, 4), 28);
    EXPECT_EQ(conjecture2_bound(14, 4), 32);
}

TEST(Formulas, CliqueParams) {
    const auto p = clique_params(30, 4, 11, 8);
    EXPECT_EQ(p.r, 0);
    EXPECT_EQ(p.r_k, QuadraticSurd::integer(3));
    EXPECT_EQ(p.n_minus_natural, 9);
    EXPECT_EQ(p.n_plus, QuadraticSurd::integer(12));
    EXPECT_TRUE(p.large_s);

    const auto q = clique_params(12, 4, 11, 1);
    EXPECT_EQ(q.r_k, QuadraticSurd::sqrt_of(30));
    EXPECT_FALSE(q.n_minus_natural.has_value());
    EXPECT_EQ(q.scaled_radicand, 60);
}

TEST(Formulas, DeltaM) {
    for (std::int64_t s : {3, 5, 9}) EXPECT_EQ(delta_m(30, 4, s, 1, s - 1), QuadraticSurd::integer(0));
    EXPECT_EQ(delta_m(30, 4, 11, 1, 0), QuadraticSurd::sqrt_of(120) / 6);
    // Delta_0 = R_k / (k-1).
    for (std::int64_t k = 3; k <= 6; ++k)
        for (std::int64_t n = 12; n <= 30; n += 3) {
            const auto p = clique_params(n, k, 9, 2);
            EXPECT_EQ(delta_m(n, k, 9, 2, 0), p.r_k / (k - 1)) << n << " " << k;
        }
    EXPECT_THROW(delta_m(30, 4, 5, 1, 5), std::invalid_argument);
}

TEST(Formulas, FgOffsets) {
    const auto a = fg_offsets(2, 1, Parity::Even, 0);
    EXPECT_EQ(a.root, 2);
    EXPECT_EQ(a.f_doubled, -4);
    EXPECT_EQ(a.g_doubled, 0);
    EXPECT_EQ(fg_offsets(5, 1, Parity::Even, 0).f_doubled, -20);
    EXPECT_THROW(fg_offsets(4, 1, Parity::Even, 0), std::invalid_argument);
    EXPECT_EQ(f_doubled_at(100, 5, 1, 0), 500 - 20);
}

TEST(Formulas, PartSizesNearBalanced) {
    // Compositions within d of the Turan edge count stay within d of the balanced sizes.
    for (std::int64_t k = 3; k <= 5; ++k)
        for (std::int64_t n = k - 1; n <= 22; ++n) {
            const std::int64_t parts = k - 1;
            const std::int64_t tk = turan_edge_count(n, parts);
            const std::int64_t lo = n / parts;
            const std::int64_t hi = (n + parts - 1) / parts;
            std::vector<std::int64_t> x;
            std::function<void(std::int64_t)> rec = [&](std::int64_t left) {
                if (static_cast<std::int64_t>(x.size()) == parts - 1) {
                    if (left < 1) return;
                    x.push_back(left);
                    std::int64_t cross = 0;
                    for (std::size_t i = 0; i < x.size(); ++i)
                        for (std::size_t j = i + 1; j < x.size(); ++j) cross += x[i] * x[j];
                    const std::int64_t d = tk - cross;
                    for (std::int64_t xi : x) {
                        EXPECT_GE(xi, lo - d);
                        EXPECT_LE(xi, hi + d);
                    }
                    x.pop_back();
                    return;
                }
                for (std::int64_t v = 1; v <= left; ++v) {
                    x.push_back(v);
                    rec(left - v);
                    x.pop_back();
                }
            };
            rec(n);
        }
}

TEST(PartVector, BasicsAndValidation) {
    const PartVector x{5, 4, 3};
    EXPECT_EQ(x.total(), 12);
    EXPECT_EQ(x.cross_pairs(), 47);
    EXPECT_EQ(x.product(1, 3), 12);
    EXPECT_EQ(x.to_string(), "(5,4,3)");
    EXPECT_THROW(PartVector({3, 4}), std::invalid_argument);
    EXPECT_THROW(PartVector({3, 0}), std::invalid_argument);
    EXPECT_EQ(balanced_partition(13, 3), PartVector({5, 4, 4}));
}
