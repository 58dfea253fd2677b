#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rademacher/graph.hpp"
#include "rademacher/partition.hpp"

// Generators for the extremal families. Every generator returns the full
// recipe (parts, added pairs, removed pairs) together with the realized graph.
// Vertices are numbered part by part in the order of the (nonincreasing)
// part vector, so outputs are deterministic.
namespace rademacher::build {

/// Raised when the requested member does not exist; the message names the
/// inequality that failed.
class InfeasibleConstruction : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Family { BM, BS, KM, KMSpecial, TBox, Turan, CompleteMultipartite };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

struct Params {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::int64_t m = 0;
};

struct ConstructionSpec {
    Family family = Family::CompleteMultipartite;
    Params params;
    PartVector parts;
    std::vector<Edge> added;    // pairs inside parts
    std::vector<Edge> removed;  // cross pairs
};

struct Construction {
    ConstructionSpec spec;
    Graph graph;
};

/// Complete multipartite graph on spec.parts, plus added, minus removed.
Graph realize(const ConstructionSpec& spec);

/// No triangle has all three edges in added + removed.
bool side_condition_holds(const ConstructionSpec& spec);
/// The added pairs are vertex disjoint.
bool added_is_matching(const ConstructionSpec& spec);
/// Index of the part containing v.
std::size_t part_of(const PartVector& parts, Vertex v);
/// First vertex of part i.
Vertex part_start(const PartVector& parts, std::size_t i);

Construction complete_multipartite(const PartVector& parts);
Construction turan_graph(std::int64_t n, std::int64_t parts);
/// Canonical member of BM_{s,t}(n): matching u_i v_i in V_1, removals v_i w_i, distinct w_i in V_2.
Construction bm_graph(std::int64_t n, std::int64_t s, std::int64_t t);
/// Canonical member of BS_{s,t}(n): s-1 matching pairs in V_1, one in V_2, removals v'_i v'_s.
Construction bs_graph(std::int64_t n, std::int64_t s, std::int64_t t);
/// Canonical member of KM_{m,s}(x): matching in V_1, removals v_i w_i with distinct w_i in the last part.
Construction km_graph(const PartVector& x, std::int64_t m, std::int64_t s);
/// KM(n,k,s,t): parts (n+, n-, ..., n-), s matching pairs in V_1, no removals.
Construction km_special(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t t);
/// T_{k-1}(n) with u1v1 in V_1 and u2v2 in V_2 added and v1v2 removed.
Construction t_box(std::int64_t n, std::int64_t k);
/// T_{parts}(n) with s disjoint edges added inside the largest part.
Construction turan_plus_matching(std::int64_t n, std::int64_t parts, std::int64_t s);

/// All removal patterns of m_st cross pairs for the canonical matching of
/// bm_graph that satisfy the family's side condition, in lexicographic order,
/// at most `limit` of them. No isomorphism reduction.
std::vector<Construction> enumerate_bm_patterns(std::int64_t n, std::int64_t s, std::int64_t t, std::size_t limit);

nlohmann::json to_json(const ConstructionSpec& spec);

}  // namespace rademacher::build
