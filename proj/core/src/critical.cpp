#include "rademacher/critical.hpp"

#include <string>
#include <vector>

#include "rademacher/coloring.hpp"
#include "rademacher/counting.hpp"
#include "rademacher/graph6.hpp"

namespace rademacher::oracle {
namespace {

int require_critical(const Graph& f) {
    const int k = chromatic_number(f);
    if (k < 3 || !is_k_critical(f, k)) {
        throw PatternNotCritical("pattern " + to_graph6(f) + " is not k-critical for k = chi(F) = " + std::to_string(k));
    }
    return k;
}

Graph multipartite_plus_edge(std::span<const std::int64_t> x) {
    std::int64_t n = 0;
    for (std::int64_t v : x) {
        if (v < 1) throw std::invalid_argument("part sizes must be positive");
        n += v;
    }
    if (x.empty() || x[0] < 2) throw std::invalid_argument("the first part needs at least 2 vertices");
    std::vector<std::size_t> part(static_cast<std::size_t>(n));
    std::size_t at = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::int64_t j = 0; j < x[i]; ++j) part[at++] = i;
    Graph g(static_cast<std::size_t>(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part[u] != part[v]) g.add_edge(u, v);
    g.add_edge(0, 1);
    return g;
}

}  // namespace

CopyCount c_multipartite(std::span<const std::int64_t> x, const Graph& f) {
    const int k = require_critical(f);
    if (static_cast<std::size_t>(k - 1) != x.size()) {
        throw std::invalid_argument("c_multipartite needs chi(F)-1 = " + std::to_string(k - 1) + " parts, got " +
                                    std::to_string(x.size()));
    }
    return count_copies(multipartite_plus_edge(x), f);
}

CnF c_of_nF(std::int64_t n, const Graph& f) {
    const int k = require_critical(f);
    const PartVector parts = balanced_partition(n, k - 1);
    CnF best;
    best.n = n;
    best.pattern = f;
    best.parts = parts;
    bool found = false;
    for (std::size_t i = 0; i < parts.parts(); ++i) {
        if (parts[i] < 2 || (i > 0 && parts[i] == parts[i - 1])) continue;
        std::vector<std::int64_t> order(parts.sizes().begin(), parts.sizes().end());
        std::swap(order[0], order[i]);
        const CopyCount c = count_copies(multipartite_plus_edge(order), f);
        if (!found || c < best.value) {
            best.value = c;
            best.edge_part = i;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("c_of_nF needs a part with at least 2 vertices");
    return best;
}

nlohmann::json to_json(const CnF& c) {
    return {
        {"n", c.n},
        {"pattern", to_graph6(c.pattern)},
        {"value", c.value.value},
        {"parts", std::vector<std::int64_t>(c.parts.sizes().begin(), c.parts.sizes().end())},
        {"edge_part", c.edge_part},
    };
}

}  // namespace rademacher::oracle
