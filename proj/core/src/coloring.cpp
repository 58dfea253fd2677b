#include "rademacher/coloring.hpp"

#include <algorithm>
#include <string>

namespace rademacher {
namespace {

// DSATUR-order backtracking: always extend the uncolored vertex with the
// most distinct neighbour colors; new colors are opened one at a time.
class Colorer {
public:
    Colorer(const Graph& g, int k) : g_(g), k_(k), color_(g.order(), -1) {}

    bool run() { return extend(0, 0); }
    std::vector<int> colors() const { return color_; }

private:
    bool extend(std::size_t colored, int used) {
        if (colored == g_.order()) return true;
        const Vertex v = pick();
        std::uint64_t forbidden = 0;
        for_each_bit(g_.row(v), [&](std::size_t u) {
            if (color_[u] >= 0) forbidden |= std::uint64_t{1} << color_[u];
        });
        const int top = std::min(k_, used + 1);
        for (int c = 0; c < top; ++c) {
            if ((forbidden >> c) & 1U) continue;
            color_[v] = c;
            if (extend(colored + 1, std::max(used, c + 1))) return true;
        }
        color_[v] = -1;
        return false;
    }

    Vertex pick() const {
        Vertex best = 0;
        int best_sat = -1;
        std::size_t best_deg = 0;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (color_[v] >= 0) continue;
            std::uint64_t seen = 0;
            for_each_bit(g_.row(v), [&](std::size_t u) {
                if (color_[u] >= 0) seen |= std::uint64_t{1} << color_[u];
            });
            const int sat = std::popcount(seen);
            const std::size_t deg = g_.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    const Graph& g_;
    int k_;
    std::vector<int> color_;
};

}  // namespace

std::optional<std::vector<int>> find_coloring(const Graph& g, int k) {
    if (k < 0 || k > 64) throw std::invalid_argument("color count must be in [0, 64]");
    if (g.order() == 0) return std::vector<int>{};
    if (k == 0) return std::nullopt;
    Colorer c(g, k);
    if (!c.run()) return std::nullopt;
    return c.colors();
}

int chromatic_number(const Graph& g, std::size_t limit) {
    if (g.order() > limit) {
        throw ColoringLimitExceeded("chromatic number refused: " + std::to_string(g.order()) +
                                    " vertices exceeds limit " + std::to_string(limit));
    }
    if (g.order() == 0) return 0;
    if (edge_count(g) == 0) return 1;
    for (int k = 2;; ++k) {
        if (find_coloring(g, k)) return k;
    }
}

bool is_k_critical(const Graph& f, int k, std::size_t limit) {
    if (k < 3) throw std::invalid_argument("k-criticality is defined for k >= 3");
    if (chromatic_number(f, limit) != k) return false;
    for (auto [u, v] : f.edges()) {
        if (!find_coloring(f.without_edge(u, v), k - 1)) continue;
        return true;
    }
    return false;
}

}  // namespace rademacher
