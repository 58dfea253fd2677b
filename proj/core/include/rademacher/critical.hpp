#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "rademacher/count.hpp"
#include "rademacher/graph.hpp"
#include "rademacher/partition.hpp"

namespace rademacher::oracle {

class PatternNotCritical : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CnF {
    std::int64_t n = 0;
    Graph pattern;
    CopyCount value;
    PartVector parts;
    /// Index into `parts` of the part receiving the extra edge.
    std::size_t edge_part = 0;
};

/// Copies of f in the complete multipartite graph on x (in the given order,
/// not necessarily sorted) with one edge added inside the first part.
/// Requires f to be k-critical with k = chi(f) = x.size() + 1 and x[0] >= 2.
CopyCount c_multipartite(std::span<const std::int64_t> x, const Graph& f);

/// Minimum over placements of one extra edge inside a part of T_{chi(f)-1}(n).
CnF c_of_nF(std::int64_t n, const Graph& f);

nlohmann::json to_json(const CnF& c);

}  // namespace rademacher::oracle
