#include "rademacher/opt.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rademacher/count.hpp"
#include "rademacher/formulas.hpp"

namespace rademacher::oracle {
namespace {

void enumerate(std::vector<std::int64_t>& prefix, std::size_t parts, std::int64_t cap, std::int64_t sum_left,
               std::int64_t sq_left, std::vector<PartVector>& out) {
    const auto left = static_cast<std::int64_t>(parts - prefix.size());
    if (left == 0) {
        if (sum_left == 0 && sq_left == 0) out.emplace_back(prefix);
        return;
    }
    // Remaining parts lie in [1, cap], and equal parts minimize the square sum.
    if (sum_left < left || sum_left > left * cap) return;
    if (sq_left < 0 || sq_left * left < sum_left * sum_left) return;
    const std::int64_t hi = std::min(cap, sum_left - (left - 1));
    for (std::int64_t x = hi; x >= 1; --x) {
        if (x * left < sum_left) break;
        prefix.push_back(x);
        enumerate(prefix, parts, x, sum_left - x, sq_left - x * x, out);
        prefix.pop_back();
    }
}

void validate(const OptQuery& q) {
    if (q.k < 4) throw std::invalid_argument("opt_enumerate needs k >= 4");
    if (!(q.s > q.t && q.t >= 1)) throw std::invalid_argument("opt_enumerate needs s > t >= 1");
    if (q.m < 0 || q.m > q.s - q.t) throw std::invalid_argument("opt_enumerate needs 0 <= m <= s-t");
    if (q.n < q.k - 1) throw std::invalid_argument("opt_enumerate needs n >= k-1");
}

}  // namespace

std::string_view objective_name(Objective o) { return o == Objective::A ? "A" : "D"; }

Objective parse_objective(std::string_view name) {
    if (name == "A" || name == "a") return Objective::A;
    if (name == "D" || name == "d") return Objective::D;
    throw std::invalid_argument("unknown objective '" + std::string(name) + "', expected A or D");
}

std::int64_t objective_value(const PartVector& x, std::int64_t s, std::int64_t m, Objective o) {
    const std::size_t p = x.parts();
    if (p < 3) throw std::invalid_argument("objective needs at least 3 parts");
    const std::int64_t tail = x.product(1, p);
    if (o == Objective::A) return checked_sub(checked_mul(s, tail), checked_mul(m, x.product(1, p - 1)));
    return checked_add(checked_mul(s, tail), checked_mul(x[0] - x[1] - 2 * m, x.product(2, p)));
}

std::int64_t composition_square_sum(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t t, std::int64_t m) {
    return checked_mul(n, n) - 2 * formulas::turan_edge_count(n, k - 1) + 2 * s - 2 * t - 2 * m;
}

std::vector<PartVector> feasible_compositions(std::int64_t n, std::int64_t k, std::int64_t square_sum) {
    std::vector<PartVector> out;
    std::vector<std::int64_t> prefix;
    enumerate(prefix, static_cast<std::size_t>(k - 1), n, n, square_sum, out);
    // Descending generation; report ascending lexicographic order.
    std::reverse(out.begin(), out.end());
    return out;
}

OptResult opt_enumerate(const OptQuery& q) {
    validate(q);
    OptResult r;
    r.query = q;
    r.square_sum = composition_square_sum(q.n, q.k, q.s, q.t, q.m);
    const auto comps = feasible_compositions(q.n, q.k, r.square_sum);
    r.feasible = comps.size();
    for (const auto& x : comps) {
        const std::int64_t v = objective_value(x, q.s, q.m, q.objective);
        if (!r.value || v < *r.value) {
            r.value = v;
            r.argmin = x;
        }
        const std::int64_t tail = x.product(1, x.parts());
        if (!r.min_tail_product || tail < *r.min_tail_product) {
            r.min_tail_product = tail;
            r.tail_argmin = x;
        }
    }
    return r;
}

std::int64_t closed_form_min_tail_product(std::int64_t n, std::int64_t k, std::int64_t deficit) {
    const auto [q, r] = formulas::divide_parts(n, k);
    if (deficit == 1) {
        if (r == 0) return checked_mul(checked_pow(q, k - 3), q - 1);
        if (r == 1) return checked_mul(checked_pow(q, k - 4), (q + 1) * (q - 1));
        return checked_mul(checked_pow(q + 1, r - 2), checked_pow(q, k - r));
    }
    if (deficit == 0) {
        // Balanced parts: r of size q+1, the largest one excluded.
        if (r <= 1) return checked_pow(q, k - 2);
        return checked_mul(checked_pow(q + 1, r - 1), checked_pow(q, k - 1 - r));
    }
    throw std::invalid_argument("closed_form_min_tail_product needs deficit 0 or 1");
}

MonotonicityCheck opt_monotonicity(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t t) {
    MonotonicityCheck c;
    for (std::int64_t m = 0; m <= s - t; ++m) {
        const auto r = opt_enumerate({n, k, s, t, m, Objective::A});
        if (!r.value) continue;
        if (!c.values.empty() && *r.value <= c.values.back()) c.increasing = false;
        c.ms.push_back(m);
        c.values.push_back(*r.value);
    }
    return c;
}

nlohmann::json to_json(const OptResult& r) {
    const auto opt_parts = [](const std::optional<PartVector>& p) {
        return p ? nlohmann::json(std::vector<std::int64_t>(p->sizes().begin(), p->sizes().end())) : nlohmann::json(nullptr);
    };
    const auto opt_int = [](const std::optional<std::int64_t>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
    return {
        {"parameters",
         {{"n", r.query.n}, {"k", r.query.k}, {"s", r.query.s}, {"t", r.query.t}, {"m", r.query.m},
          {"objective", std::string(objective_name(r.query.objective))}}},
        {"square_sum", r.square_sum},
        {"feasible", r.feasible},
        {"value", opt_int(r.value)},
        {"argmin", opt_parts(r.argmin)},
        {"min_tail_product", opt_int(r.min_tail_product)},
        {"tail_argmin", opt_parts(r.tail_argmin)},
    };
}

}  // namespace rademacher::oracle
