#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rademacher {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

/// Simple undirected graph on vertices 0..n-1. Each vertex owns a bit row of
/// words_for(n) 64-bit words; the relation is kept symmetric and irreflexive.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t words() const noexcept { return words_; }

    bool adjacent(Vertex u, Vertex v) const noexcept {
        return (bits_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
    }

    /// Self-loops and out-of-range endpoints throw std::invalid_argument.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    std::span<const Word> row(Vertex v) const noexcept {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }

    std::size_t degree(Vertex v) const noexcept;
    std::vector<Vertex> neighbors(Vertex v) const;
    std::vector<Edge> edges() const;

    /// Vertex v of *this becomes perm[v] in the result.
    Graph relabeled(std::span<const Vertex> perm) const;
    Graph without_edge(Vertex u, Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_pair(Vertex u, Vertex v) const;

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> bits_;
};

/// Number of unordered adjacent pairs.
std::size_t edge_count(const Graph& g);

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph petersen_graph();

// Dynamic bitset helpers shared by the counting and search kernels.
inline std::size_t popcount(std::span<const Word> s) noexcept {
    std::size_t c = 0;
    for (Word w : s) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

inline void set_bit(std::span<Word> s, std::size_t i) noexcept { s[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void clear_bit(std::span<Word> s, std::size_t i) noexcept { s[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
inline bool test_bit(std::span<const Word> s, std::size_t i) noexcept { return (s[i / kWordBits] >> (i % kWordBits)) & 1U; }

/// Calls fn(i) for every set bit in ascending order.
template <class Fn>
void for_each_bit(std::span<const Word> s, Fn&& fn) {
    for (std::size_t w = 0; w < s.size(); ++w) {
        Word word = s[w];
        while (word != 0) {
            const auto b = static_cast<std::size_t>(std::countr_zero(word));
            fn(w * kWordBits + b);
            word &= word - 1;
        }
    }
}

}  // namespace rademacher
