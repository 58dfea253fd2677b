#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "rademacher/graph.hpp"

namespace rademacher::cover {

inline constexpr std::uint64_t kDefaultCopyBudget = 10'000'000;

/// Copy hypergraph of `pattern` in `host`: one sorted vertex set per copy.
/// Copies sharing a vertex set are hit together, so vertex sets are deduplicated.
struct CoverInstance {
    Graph host;
    Graph pattern;
    std::vector<std::vector<Vertex>> copies;
};

struct CoverResult {
    std::size_t tau = 0;
    std::vector<Vertex> witness;
    /// Pairwise vertex-disjoint copies, present only when their number equals tau.
    std::optional<std::vector<std::vector<Vertex>>> certificate;
    std::uint64_t copies = 0;
    std::uint64_t nodes = 0;
};

/// Throws BudgetExceeded when the host has more than `budget` copies.
CoverInstance make_instance(const Graph& host, const Graph& pattern, std::uint64_t budget = kDefaultCopyBudget);

/// Every copy of f in g has a vertex in `chosen`.
bool is_cover(const Graph& g, const Graph& f, std::span<const Vertex> chosen);

/// Exact minimum hitting set by branch and bound over the copy hypergraph.
CoverResult solve(const CoverInstance& instance);
CoverResult covering_number(const Graph& g, const Graph& f, std::uint64_t budget = kDefaultCopyBudget);

/// Size of a greedily built family of pairwise disjoint sets; a lower bound on tau.
std::size_t greedy_disjoint_packing(std::span<const std::vector<Vertex>> sets);

nlohmann::json to_json(const CoverResult& r);

}  // namespace rademacher::cover
