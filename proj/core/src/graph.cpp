#include "rademacher/graph.hpp"

#include <stdexcept>
#include <string>

namespace rademacher {

Graph::Graph(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_pair(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) {
        throw std::invalid_argument("vertex out of range: " + std::to_string(u) + "," + std::to_string(v) +
                                    " in graph of order " + std::to_string(n_));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    set_bit({bits_.data() + u * words_, words_}, v);
    set_bit({bits_.data() + v * words_, words_}, u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    clear_bit({bits_.data() + u * words_, words_}, v);
    clear_bit({bits_.data() + v * words_, words_}, u);
}

std::size_t Graph::degree(Vertex v) const noexcept { return popcount(row(v)); }

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for_each_bit(row(v), [&](std::size_t u) { out.push_back(static_cast<Vertex>(u)); });
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
        for_each_bit(row(u), [&](std::size_t v) {
            if (v > u) out.emplace_back(u, static_cast<Vertex>(v));
        });
    }
    return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != n_) throw std::invalid_argument("permutation size does not match graph order");
    Graph out(n_);
    for (auto [u, v] : edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
    Graph out = *this;
    out.remove_edge(u, v);
    return out;
}

std::size_t edge_count(const Graph& g) {
    std::size_t total = 0;
    for (Vertex v = 0; v < g.order(); ++v) total += g.degree(v);
    return total / 2;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
    return g;
}

Graph path_graph(std::size_t n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(i, i + 5);                // spokes
        g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return g;
}

}  // namespace rademacher
