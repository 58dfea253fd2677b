#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rademacher/partition.hpp"
#include "rademacher/surd.hpp"

// Closed-form quantities for the triangle and K_k versions of the problem,
// all in exact integer or Q(sqrt(D)) arithmetic.
namespace rademacher::formulas {

enum class Parity { Even, Odd };

inline Parity parity_of(std::int64_t n) { return n % 2 == 0 ? Parity::Even : Parity::Odd; }

/// n^2 - 4 floor(n^2/4), which is 0 for even n and 1 for odd n.
std::int64_t parity_term(std::int64_t n);
inline std::int64_t parity_term(Parity p) { return p == Parity::Even ? 0 : 1; }

/// Edges of the balanced complete `parts`-partite graph, summed from the part sizes.
std::int64_t turan_edge_count(std::int64_t n, std::int64_t parts);
/// The same number from ((p-1) n^2 - (p-r) r) / (2p), r = n mod p.
std::int64_t turan_edge_count_closed_form(std::int64_t n, std::int64_t parts);

/// sqrt(4(s - t - m) + parity_term) when it is a nonnegative integer.
std::optional<std::int64_t> triangle_root(std::int64_t s, std::int64_t t, Parity parity, std::int64_t m);
/// Every m in [0, s-t] for which triangle_root exists, ascending.
std::vector<std::int64_t> valid_removals(std::int64_t s, std::int64_t t, Parity parity);

struct TriangleParams {
    std::int64_t n = 0;
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::int64_t parity_term = 0;
    std::int64_t m_st = 0;
    std::int64_t r3 = 0;
    std::int64_t n_plus = 0;
    std::int64_t n_minus = 0;
};

/// Requires s > t >= 1, n >= 1. Throws std::invalid_argument otherwise.
TriangleParams triangle_params(std::int64_t n, std::int64_t s, std::int64_t t);

/// n+ - n- - m_st; zero iff s - t = p^2 - 1 (n even) or p(p+1) - 1 (n odd).
std::int64_t surplus(std::int64_t n, std::int64_t s, std::int64_t t);
/// s n- - m_st.
std::int64_t triangle_lower_bound(std::int64_t n, std::int64_t s, std::int64_t t);
/// (s-1) floor(n/2) + ceil(n/2) - 2(s-t).
std::int64_t conjecture1_bound(std::int64_t n, std::int64_t s, std::int64_t t);

struct Division {
    std::int64_t q = 0;
    std::int64_t r = 0;
};
/// n = q (k-1) + r with 0 <= r < k-1.
Division divide_parts(std::int64_t n, std::int64_t k);

/// The extremal part vector for the s = t + 1 clique problem. k >= 4.
PartVector y_vector(std::int64_t n, std::int64_t k);
/// Minimum K_k count for t_{k-1}(n) + s - 1 edges and covering number s. k >= 4, s >= 2.
std::int64_t min_kk_count(std::int64_t n, std::int64_t k, std::int64_t s);
/// (|V_1| + |V_2| - 2) prod_{i>=3} |V_i| on the balanced partition. k >= 4.
std::int64_t conjecture2_bound(std::int64_t n, std::int64_t k);

struct CliqueParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::int64_t q = 0;
    std::int64_t r = 0;
    /// 2(k-1)(s-t) + (k-1-r) r, so that (k-2) R_k^2 equals it.
    std::int64_t scaled_radicand = 0;
    QuadraticSurd r_k;
    QuadraticSurd n_minus;
    QuadraticSurd n_plus;
    std::optional<std::int64_t> n_minus_natural;  // set iff n- is a nonnegative integer
    bool large_s = false;                         // s > 2 R_k, decided exactly
};

/// Requires k >= 3 and s > t >= 1.
CliqueParams clique_params(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t t);

/// sqrt(2(k-1)(k-2)(s-t-m) + (k-2)(k-1-r) r) / ((k-1)(k-2)); requires 0 <= m <= s-t.
QuadraticSurd delta_m(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t t, std::int64_t m);
/// (n/(k-1) - delta_m)^(k-2): the relaxed optimum of prod_{i>=2} x_i.
QuadraticSurd relaxed_tail_product(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t t, std::int64_t m);

/// f(m) - sn/2 and g(m) - sn/2, stored doubled so both are integers.
struct FgOffsets {
    std::int64_t m = 0;
    std::int64_t root = 0;
    std::int64_t f_doubled = 0;  // -s * root - 2m
    std::int64_t g_doubled = 0;  // -(s-2) * root - 4m
};

/// Throws std::invalid_argument unless m is in [0, s-t] with an integral root.
FgOffsets fg_offsets(std::int64_t s, std::int64_t t, Parity parity, std::int64_t m);
/// 2 f(m) and 2 g(m) with n restored: s n - s root - 2m and s n - (s-2) root - 4m.
std::int64_t f_doubled_at(std::int64_t n, std::int64_t s, std::int64_t t, std::int64_t m);
std::int64_t g_doubled_at(std::int64_t n, std::int64_t s, std::int64_t t, std::int64_t m);

}  // namespace rademacher::formulas
