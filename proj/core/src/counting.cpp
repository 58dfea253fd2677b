#include "rademacher/counting.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace rademacher {
namespace {

// Candidate rows for depth d live at scratch[d * words, (d+1) * words).
wide_count count_clique_rec(const Graph& g, std::span<const Word> cand, std::size_t remaining,
                            std::vector<Word>& scratch, std::size_t depth) {
    if (remaining == 1) return popcount(cand);
    const std::size_t words = g.words();
    std::span<Word> rest{scratch.data() + depth * 2 * words, words};
    std::span<Word> next{scratch.data() + (depth * 2 + 1) * words, words};
    std::copy(cand.begin(), cand.end(), rest.begin());

    wide_count total = 0;
    for (std::size_t w = 0; w < words; ++w) {
        while (rest[w] != 0) {
            const auto v = static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(rest[w])));
            rest[w] &= rest[w] - 1;
            const auto row = g.row(v);
            if (remaining == 2) {
                std::size_t c = 0;
                for (std::size_t i = w; i < words; ++i) c += static_cast<std::size_t>(std::popcount(row[i] & rest[i]));
                total = checked_add(total, c);
                continue;
            }
            bool any = false;
            for (std::size_t i = 0; i < words; ++i) {
                next[i] = row[i] & rest[i];
                any = any || next[i] != 0;
            }
            if (any) total = checked_add(total, count_clique_rec(g, next, remaining - 1, scratch, depth + 1));
        }
    }
    return total;
}

bool list_clique_rec(const Graph& g, std::span<const Word> cand, std::size_t remaining, std::vector<Vertex>& stack,
                     std::vector<Word>& scratch, std::size_t depth,
                     const std::function<bool(std::span<const Vertex>)>& fn) {
    const std::size_t words = g.words();
    std::span<Word> rest{scratch.data() + depth * 2 * words, words};
    std::span<Word> next{scratch.data() + (depth * 2 + 1) * words, words};
    std::copy(cand.begin(), cand.end(), rest.begin());
    for (std::size_t w = 0; w < words; ++w) {
        while (rest[w] != 0) {
            const auto v = static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(rest[w])));
            rest[w] &= rest[w] - 1;
            stack.push_back(v);
            if (remaining == 1) {
                if (!fn(stack)) return false;
            } else {
                const auto row = g.row(v);
                for (std::size_t i = 0; i < words; ++i) next[i] = row[i] & rest[i];
                if (!list_clique_rec(g, next, remaining - 1, stack, scratch, depth + 1, fn)) return false;
            }
            stack.pop_back();
        }
    }
    return true;
}

std::vector<Word> all_vertices(const Graph& g) {
    std::vector<Word> s(g.words(), 0);
    for (std::size_t v = 0; v < g.order(); ++v) set_bit(s, v);
    return s;
}

// Pattern vertices are placed so each one, where possible, has an already
// placed neighbour; back[i] lists the earlier positions adjacent to position i.
struct EmbeddingPlan {
    std::vector<Vertex> order;
    std::vector<std::vector<std::size_t>> back;
};

EmbeddingPlan plan_embedding(const Graph& f) {
    const std::size_t n = f.order();
    EmbeddingPlan plan;
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> position(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = 0;
        std::size_t best_links = 0;
        std::size_t best_degree = 0;
        bool found = false;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v]) continue;
            std::size_t links = 0;
            for (Vertex u : plan.order)
                if (f.adjacent(u, v)) ++links;
            const std::size_t deg = f.degree(v);
            if (!found || links > best_links || (links == best_links && deg > best_degree)) {
                best = v;
                best_links = links;
                best_degree = deg;
                found = true;
            }
        }
        placed[best] = true;
        position[best] = step;
        std::vector<std::size_t> back;
        for (Vertex u : plan.order)
            if (f.adjacent(u, best)) back.push_back(position[u]);
        plan.order.push_back(best);
        plan.back.push_back(std::move(back));
    }
    return plan;
}

class EmbeddingWalker {
public:
    EmbeddingWalker(const Graph& host, const Graph& pattern)
        : host_(host), plan_(plan_embedding(pattern)), words_(host.words()),
          scratch_((pattern.order() + 1) * host.words(), 0), image_(pattern.order(), 0),
          used_(host.words(), 0), everything_(all_vertices(host)) {}

    wide_count count() {
        if (plan_.order.empty()) return 1;
        return count_rec(0);
    }

    // fn receives the image indexed by pattern vertex.
    bool walk(const std::function<bool(std::span<const Vertex>)>& fn) {
        by_vertex_.assign(plan_.order.size(), 0);
        return walk_rec(0, fn);
    }

private:
    std::span<Word> candidates(std::size_t pos) {
        std::span<Word> cand{scratch_.data() + pos * words_, words_};
        std::copy(everything_.begin(), everything_.end(), cand.begin());
        for (std::size_t b : plan_.back[pos]) {
            const auto row = host_.row(image_[b]);
            for (std::size_t i = 0; i < words_; ++i) cand[i] &= row[i];
        }
        for (std::size_t i = 0; i < words_; ++i) cand[i] &= ~used_[i];
        return cand;
    }

    wide_count count_rec(std::size_t pos) {
        auto cand = candidates(pos);
        if (pos + 1 == plan_.order.size()) return popcount(cand);
        wide_count total = 0;
        for_each_bit(cand, [&](std::size_t v) {
            image_[pos] = static_cast<Vertex>(v);
            set_bit(used_, v);
            total = checked_add(total, count_rec(pos + 1));
            clear_bit(used_, v);
        });
        return total;
    }

    bool walk_rec(std::size_t pos, const std::function<bool(std::span<const Vertex>)>& fn) {
        if (pos == plan_.order.size()) {
            for (std::size_t i = 0; i < pos; ++i) by_vertex_[plan_.order[i]] = image_[i];
            return fn(by_vertex_);
        }
        auto cand = candidates(pos);
        std::vector<Vertex> choices;
        for_each_bit(cand, [&](std::size_t v) { choices.push_back(static_cast<Vertex>(v)); });
        for (Vertex v : choices) {
            image_[pos] = v;
            set_bit(used_, v);
            const bool go = walk_rec(pos + 1, fn);
            clear_bit(used_, v);
            if (!go) return false;
        }
        return true;
    }

    const Graph& host_;
    EmbeddingPlan plan_;
    std::size_t words_;
    std::vector<Word> scratch_;
    std::vector<Vertex> image_;
    std::vector<Vertex> by_vertex_;
    std::vector<Word> used_;
    std::vector<Word> everything_;
};

}  // namespace

CopyCount count_cliques(const Graph& g, std::size_t k) {
    if (k == 0) throw std::invalid_argument("clique size must be at least 1");
    if (k > g.order()) return CopyCount{0};
    if (k == 1) return CopyCount{g.order()};
    std::vector<Word> scratch(2 * k * g.words() + g.words(), 0);
    const auto cand = all_vertices(g);
    return narrow_count(count_clique_rec(g, cand, k, scratch, 0));
}

void for_each_clique(const Graph& g, std::size_t k, const std::function<bool(std::span<const Vertex>)>& fn) {
    if (k == 0) throw std::invalid_argument("clique size must be at least 1");
    if (k > g.order()) return;
    std::vector<Word> scratch(2 * k * g.words() + g.words(), 0);
    std::vector<Vertex> stack;
    stack.reserve(k);
    const auto cand = all_vertices(g);
    list_clique_rec(g, cand, k, stack, scratch, 0, fn);
}

wide_count count_embeddings(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) return 0;
    return EmbeddingWalker(host, pattern).count();
}

wide_count automorphism_count(const Graph& f) { return count_embeddings(f, f); }

bool is_complete(const Graph& g) {
    const std::size_t n = g.order();
    return edge_count(g) == n * (n == 0 ? 0 : n - 1) / 2;
}

CopyCount count_copies(const Graph& g, const Graph& f) {
    if (f.order() == 0) throw std::invalid_argument("pattern graph must be nonempty");
    if (is_complete(f)) return count_cliques(g, f.order());
    const wide_count aut = automorphism_count(f);
    const wide_count emb = count_embeddings(g, f);
    if (emb % aut != 0) throw std::logic_error("embedding count not divisible by automorphism count");
    return narrow_count(emb / aut);
}

std::vector<std::vector<Vertex>> copy_vertex_sets(const Graph& g, const Graph& f, std::uint64_t budget) {
    const CopyCount copies = count_copies(g, f);
    if (copies.value > budget) {
        throw BudgetExceeded("pattern has " + std::to_string(copies.value) + " copies, budget is " +
                             std::to_string(budget));
    }
    std::vector<std::vector<Vertex>> out;
    if (is_complete(f)) {
        out.reserve(copies.value);
        for_each_clique(g, f.order(), [&](std::span<const Vertex> c) {
            out.emplace_back(c.begin(), c.end());
            return true;
        });
        return out;  // already lexicographic
    }
    std::set<std::vector<Vertex>> seen;
    EmbeddingWalker walker(g, f);
    walker.walk([&](std::span<const Vertex> image) {
        std::vector<Vertex> s(image.begin(), image.end());
        std::sort(s.begin(), s.end());
        seen.insert(std::move(s));
        return true;
    });
    out.assign(seen.begin(), seen.end());
    return out;
}

}  // namespace rademacher
