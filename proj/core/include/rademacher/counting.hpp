#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "rademacher/count.hpp"
#include "rademacher/graph.hpp"

namespace rademacher {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Number of k-vertex subsets inducing a complete graph (k >= 1).
CopyCount count_cliques(const Graph& g, std::size_t k);

/// Visits every k-clique once, vertices ascending. Returning false stops the walk.
void for_each_clique(const Graph& g, std::size_t k, const std::function<bool(std::span<const Vertex>)>& fn);

/// Injective maps V(pattern) -> V(host) sending edges to edges (not necessarily induced).
wide_count count_embeddings(const Graph& host, const Graph& pattern);

/// |Aut(f)|, found as the edge-preserving bijections of f onto itself.
wide_count automorphism_count(const Graph& f);

/// Unlabeled copies: distinct subgraphs of g isomorphic to f, i.e. embeddings / |Aut(f)|.
CopyCount count_copies(const Graph& g, const Graph& f);

bool is_complete(const Graph& g);

/// Vertex sets of all copies of f in g, each sorted ascending, deduplicated,
/// in lexicographic order. Throws BudgetExceeded if the copy count exceeds budget.
std::vector<std::vector<Vertex>> copy_vertex_sets(const Graph& g, const Graph& f, std::uint64_t budget);

}  // namespace rademacher
