#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rademacher/partition.hpp"

namespace rademacher::oracle {

/// A: (s - m/x_{k-1}) prod_{i>=2} x_i.  D: (s + (x_1 - x_2 - 2m)/x_2) prod_{i>=2} x_i.
enum class Objective { A, D };

std::string_view objective_name(Objective o);
Objective parse_objective(std::string_view name);

struct OptQuery {
    std::int64_t n = 0;
    std::int64_t k = 4;
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::int64_t m = 0;
    Objective objective = Objective::A;
};

struct OptResult {
    OptQuery query;
    /// Prescribed sum of squares of the feasible compositions.
    std::int64_t square_sum = 0;
    std::size_t feasible = 0;
    std::optional<std::int64_t> value;
    std::optional<PartVector> argmin;
    std::optional<std::int64_t> min_tail_product;
    std::optional<PartVector> tail_argmin;
};

/// Objective value at x, both objectives exact integers.
std::int64_t objective_value(const PartVector& x, std::int64_t s, std::int64_t m, Objective o);

/// n^2 - 2 t_{k-1}(n) + 2s - 2t - 2m.
std::int64_t composition_square_sum(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t t, std::int64_t m);

/// Nonincreasing compositions of n into k-1 positive parts with the prescribed square sum, lexicographic.
std::vector<PartVector> feasible_compositions(std::int64_t n, std::int64_t k, std::int64_t square_sum);

/// Exact minimum over the feasible compositions; ties go to the lexicographically first.
/// Requires k >= 4, s > t >= 1, 0 <= m <= s-t. An empty feasible set is a valid outcome.
OptResult opt_enumerate(const OptQuery& q);

/// Closed-form minimum of prod_{i>=2} x_i over compositions whose cross pair count is
/// t_{k-1}(n) - deficit, for deficit in {0, 1}.
std::int64_t closed_form_min_tail_product(std::int64_t n, std::int64_t k, std::int64_t deficit);

struct MonotonicityCheck {
    std::vector<std::int64_t> ms;
    std::vector<std::int64_t> values;  // objective A optimum at each feasible m
    bool increasing = true;
};

/// Objective A optimum over m in [0, s-t], skipping infeasible m.
MonotonicityCheck opt_monotonicity(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t t);

nlohmann::json to_json(const OptResult& r);

}  // namespace rademacher::oracle
