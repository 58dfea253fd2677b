#include "rademacher/formulas.hpp"

#include <stdexcept>
#include <string>

#include "rademacher/count.hpp"

namespace rademacher::formulas {
namespace {

void require_st(std::int64_t s, std::int64_t t) {
    if (!(s > t && t >= 1)) {
        throw std::invalid_argument("need s > t >= 1, got s=" + std::to_string(s) + " t=" + std::to_string(t));
    }
}

void require_k(std::int64_t k, std::int64_t min_k) {
    if (k < min_k) throw std::invalid_argument("need k >= " + std::to_string(min_k) + ", got " + std::to_string(k));
}

}  // namespace

std::int64_t parity_term(std::int64_t n) {
    const std::int64_t sq = checked_mul(n, n);
    return sq - 4 * (sq / 4);
}

std::int64_t turan_edge_count(std::int64_t n, std::int64_t parts) {
    if (n < 0 || parts < 1) throw std::invalid_argument("turan_edge_count needs n >= 0 and parts >= 1");
    const std::int64_t q = n / parts;
    const std::int64_t r = n % parts;
    // r parts of size q+1, parts-r of size q
    std::int64_t sum = 0;
    std::int64_t prefix = 0;
    for (std::int64_t i = 0; i < parts; ++i) {
        const std::int64_t x = q + (i < r ? 1 : 0);
        sum = checked_add(sum, checked_mul(prefix, x));
        prefix += x;
    }
    return sum;
}

std::int64_t turan_edge_count_closed_form(std::int64_t n, std::int64_t parts) {
    if (n < 0 || parts < 1) throw std::invalid_argument("turan_edge_count needs n >= 0 and parts >= 1");
    const std::int64_t r = n % parts;
    const std::int64_t num = checked_sub(checked_mul(parts - 1, checked_mul(n, n)), (parts - r) * r);
    if (num % (2 * parts) != 0) throw std::logic_error("Turan closed form is not integral");
    return num / (2 * parts);
}

std::optional<std::int64_t> triangle_root(std::int64_t s, std::int64_t t, Parity parity, std::int64_t m) {
    if (m < 0) return std::nullopt;
    return exact_sqrt(4 * (s - t - m) + parity_term(parity));
}

std::vector<std::int64_t> valid_removals(std::int64_t s, std::int64_t t, Parity parity) {
    require_st(s, t);
    std::vector<std::int64_t> out;
    for (std::int64_t m = 0; m <= s - t; ++m)
        if (triangle_root(s, t, parity, m)) out.push_back(m);
    return out;
}

TriangleParams triangle_params(std::int64_t n, std::int64_t s, std::int64_t t) {
    require_st(s, t);
    if (n < 1) throw std::invalid_argument("need n >= 1");
    TriangleParams p;
    p.n = n;
    p.s = s;
    p.t = t;
    p.parity_term = parity_term(n);
    const Parity parity = parity_of(n);
    for (std::int64_t m = 0;; ++m) {
        // m = s - t always has root sqrt(parity_term) in {0, 1}.
        if (auto root = triangle_root(s, t, parity, m)) {
            p.m_st = m;
            p.r3 = *root;
            break;
        }
    }
    p.n_plus = (n + p.r3) / 2;
    p.n_minus = (n - p.r3) / 2;
    return p;
}

std::int64_t surplus(std::int64_t n, std::int64_t s, std::int64_t t) {
    const auto p = triangle_params(n, s, t);
    return p.n_plus - p.n_minus - p.m_st;
}

std::int64_t triangle_lower_bound(std::int64_t n, std::int64_t s, std::int64_t t) {
    const auto p = triangle_params(n, s, t);
    return checked_mul(s, p.n_minus) - p.m_st;
}

std::int64_t conjecture1_bound(std::int64_t n, std::int64_t s, std::int64_t t) {
    require_st(s, t);
    return checked_mul(s - 1, n / 2) + (n + 1) / 2 - 2 * (s - t);
}

Division divide_parts(std::int64_t n, std::int64_t k) {
    require_k(k, 2);
    if (n < 0) throw std::invalid_argument("need n >= 0");
    return {n / (k - 1), n % (k - 1)};
}

PartVector y_vector(std::int64_t n, std::int64_t k) {
    require_k(k, 4);
    if (n < k - 1) throw std::invalid_argument("y_vector needs n >= k-1");
    const auto [q, r] = divide_parts(n, k);
    const auto parts = static_cast<std::size_t>(k - 1);
    std::vector<std::int64_t> y(parts, q);
    if (r == 0) {
        if (q < 2) throw std::invalid_argument("y_vector with r=0 needs q >= 2 (a part would be empty)");
        y.front() = q + 1;
        y.back() = q - 1;
    } else if (r == 1) {
        y.front() = q + 1;
    } else {
        // (q+2, q+1 repeated r-2 times, q repeated k-r times)
        y.front() = q + 2;
        for (std::int64_t i = 1; i <= r - 2; ++i) y[static_cast<std::size_t>(i)] = q + 1;
    }
    return PartVector(std::move(y));
}

std::int64_t min_kk_count(std::int64_t n, std::int64_t k, std::int64_t s) {
    require_k(k, 4);
    if (s < 2) throw std::invalid_argument("min_kk_count needs s >= 2");
    const auto [q, r] = divide_parts(n, k);
    if (r == 0) return checked_mul(s, checked_mul(checked_pow(q, k - 3), q - 1));
    if (r == 1) return checked_sub(checked_mul(s, checked_pow(q, k - 2)), checked_pow(q, k - 3));
    return checked_mul(s, checked_mul(checked_pow(q + 1, r - 2), checked_pow(q, k - r)));
}

std::int64_t conjecture2_bound(std::int64_t n, std::int64_t k) {
    require_k(k, 4);
    const PartVector v = balanced_partition(n, k - 1);
    return checked_mul(v[0] + v[1] - 2, v.product(2, v.parts()));
}

CliqueParams clique_params(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t t) {
    require_k(k, 3);
    require_st(s, t);
    CliqueParams p;
    p.n = n;
    p.k = k;
    p.s = s;
    p.t = t;
    const auto d = divide_parts(n, k);
    p.q = d.q;
    p.r = d.r;
    p.scaled_radicand = checked_add(checked_mul(2 * (k - 1), s - t), (k - 1 - p.r) * p.r);
    p.r_k = QuadraticSurd::sqrt_of(p.scaled_radicand, k - 2);
    p.n_minus = (QuadraticSurd::integer(n) - p.r_k) / (k - 1);
    p.n_plus = (QuadraticSurd::integer(n) + QuadraticSurd::integer(k - 2) * p.r_k) / (k - 1);
    if (auto v = p.n_minus.as_integer(); v && *v >= 0) p.n_minus_natural = *v;
    // s > 2 R_k  <=>  s^2 (k-2) > 4 * scaled_radicand
    p.large_s = checked_mul(checked_mul(s, s), k - 2) > checked_mul(4, p.scaled_radicand);
    return p;
}

QuadraticSurd delta_m(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t t, std::int64_t m) {
    require_k(k, 3);
    require_st(s, t);
    if (m < 0 || m > s - t) {
        throw std::invalid_argument("delta_m needs 0 <= m <= s-t, got m=" + std::to_string(m));
    }
    const auto [q, r] = divide_parts(n, k);
    (void)q;
    const std::int64_t rad = checked_add(checked_mul(2 * (k - 1) * (k - 2), s - t - m), (k - 2) * (k - 1 - r) * r);
    if (rad < 0) throw std::invalid_argument("delta_m radicand is negative");
    return QuadraticSurd::sqrt_of(rad) / ((k - 1) * (k - 2));
}

QuadraticSurd relaxed_tail_product(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t t, std::int64_t m) {
    const QuadraticSurd y = QuadraticSurd::rational(n, k - 1) - delta_m(n, k, s, t, m);
    return y.pow(static_cast<unsigned>(k - 2));
}

FgOffsets fg_offsets(std::int64_t s, std::int64_t t, Parity parity, std::int64_t m) {
    require_st(s, t);
    if (m < 0 || m > s - t) throw std::invalid_argument("fg_offsets needs 0 <= m <= s-t");
    const auto root = triangle_root(s, t, parity, m);
    if (!root) throw std::invalid_argument("m=" + std::to_string(m) + " is not a valid removal count (radicand not a square)");
    return {m, *root, -s * *root - 2 * m, -(s - 2) * *root - 4 * m};
}

std::int64_t f_doubled_at(std::int64_t n, std::int64_t s, std::int64_t t, std::int64_t m) {
    return checked_mul(s, n) + fg_offsets(s, t, parity_of(n), m).f_doubled;
}

std::int64_t g_doubled_at(std::int64_t n, std::int64_t s, std::int64_t t, std::int64_t m) {
    return checked_mul(s, n) + fg_offsets(s, t, parity_of(n), m).g_doubled;
}

}  // namespace rademacher::formulas
