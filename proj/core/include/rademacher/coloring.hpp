#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rademacher/graph.hpp"

namespace rademacher {

class ColoringLimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr std::size_t kDefaultColoringLimit = 32;

/// A proper coloring with at most k colors, or nullopt. Exact backtracking.
std::optional<std::vector<int>> find_coloring(const Graph& g, int k);

/// Exact chromatic number by iterated k-colorability. Refuses graphs above `limit` vertices.
int chromatic_number(const Graph& g, std::size_t limit = kDefaultColoringLimit);

/// chi(f) == k and some edge e has chi(f - e) < k. Requires k >= 3.
bool is_k_critical(const Graph& f, int k, std::size_t limit = kDefaultColoringLimit);

}  // namespace rademacher
