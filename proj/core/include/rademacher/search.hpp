#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rademacher/count.hpp"
#include "rademacher/graph.hpp"

namespace rademacher::oracle {

class SearchRefused : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SearchParams {
    std::size_t n = 0;
    std::size_t e = 0;
    std::size_t k = 3;
    std::size_t s = 0;
    std::size_t max_n = 8;
    /// 0 means: RADEMACHER_WORKERS if set, else hardware concurrency.
    unsigned workers = 0;
    std::size_t witness_cap = 16;
};

struct SearchReport {
    SearchParams params;
    std::optional<CopyCount> minimum;  // empty when no graph meets the constraints
    /// Canonical graph6 strings, lexicographically smallest first, at most witness_cap.
    std::vector<std::string> witnesses;
    std::uint64_t graphs_scanned = 0;
    std::uint64_t pruned = 0;
    std::size_t partitions = 0;
};

/// Exact minimum number of K_k over labeled graphs with n vertices, e edges and
/// K_k-covering number s. Throws SearchRefused when n > max_n or e > n(n-1)/2.
SearchReport brute_min_cliques(const SearchParams& params);

/// Relabeling of g that is the same for every graph isomorphic to g.
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);

/// Worker count from RADEMACHER_WORKERS, falling back to hardware concurrency (at least 1).
unsigned default_workers();

nlohmann::json to_json(const SearchReport& r);

}  // namespace rademacher::oracle
