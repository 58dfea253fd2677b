#include "rademacher/search.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <set>
#include <thread>

#include "rademacher/graph6.hpp"

#include "parallel.hpp"

namespace rademacher::oracle {
namespace {

using Mask = std::uint32_t;
constexpr std::size_t kHardMaxN = 11;
constexpr std::size_t kPrefixDepth = 6;

struct Pair {
    Vertex u;
    Vertex v;
};

struct PartitionResult {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::set<std::string> witnesses;
    std::uint64_t scanned = 0;
    std::uint64_t pruned = 0;
};

class PartitionSearch {
public:
    PartitionSearch(const SearchParams& p, const std::vector<Pair>& pairs,
                    const std::vector<std::vector<Mask>>& subsets_by_size)
        : p_(p), pairs_(pairs), subsets_(subsets_by_size), adj_(p.n, 0) {}

    PartitionResult run(std::uint64_t prefix, std::size_t depth) {
        out_ = PartitionResult{};
        std::fill(adj_.begin(), adj_.end(), 0);
        cliques_.clear();
        chosen_ = 0;
        for (std::size_t i = 0; i < depth; ++i) {
            if ((prefix >> (depth - 1 - i)) & 1U) {
                if (chosen_ == p_.e) return out_;
                add(pairs_[i]);
            }
        }
        if (p_.e < chosen_ || p_.e - chosen_ > pairs_.size() - depth) return out_;
        if (!tau_at_most(p_.s)) {
            ++out_.pruned;
            return out_;
        }
        dfs(depth);
        return out_;
    }

private:
    void collect(Mask within, std::size_t r, Mask base) {
        if (r == 0) {
            cliques_.push_back(base);
            return;
        }
        while (within != 0) {
            const auto v = static_cast<Vertex>(std::countr_zero(within));
            within &= within - 1;
            collect(within & adj_[v], r - 1, base | (Mask{1} << v));
        }
    }

    void add(const Pair& e) {
        const Mask base = (Mask{1} << e.u) | (Mask{1} << e.v);
        if (p_.k == 2) {
            cliques_.push_back(base);
        } else {
            collect(adj_[e.u] & adj_[e.v], p_.k - 2, base);
        }
        adj_[e.u] |= Mask{1} << e.v;
        adj_[e.v] |= Mask{1} << e.u;
        ++chosen_;
    }

    void remove(const Pair& e, std::size_t clique_mark) {
        adj_[e.u] &= ~(Mask{1} << e.v);
        adj_[e.v] &= ~(Mask{1} << e.u);
        cliques_.resize(clique_mark);
        --chosen_;
    }

    bool hits_all(Mask set) const {
        return std::all_of(cliques_.begin(), cliques_.end(), [set](Mask c) { return (c & set) != 0; });
    }

    // Covering number is monotone in the edge set, so one size suffices.
    bool tau_at_most(std::size_t j) const {
        if (cliques_.empty()) return true;
        if (j >= subsets_.size()) return true;
        return std::any_of(subsets_[j].begin(), subsets_[j].end(), [this](Mask m) { return hits_all(m); });
    }

    void leaf() {
        ++out_.scanned;
        if (!tau_at_most(p_.s)) return;
        if (p_.s > 0 && tau_at_most(p_.s - 1)) return;
        const std::uint64_t count = cliques_.size();
        if (count > out_.best) return;
        if (count < out_.best) {
            out_.best = count;
            out_.witnesses.clear();
        }
        Graph g(p_.n);
        for (Vertex u = 0; u < p_.n; ++u)
            for (Vertex v = u + 1; v < p_.n; ++v)
                if ((adj_[u] >> v) & 1U) g.add_edge(u, v);
        out_.witnesses.insert(canonical_graph6(g));
        if (out_.witnesses.size() > p_.witness_cap) out_.witnesses.erase(std::prev(out_.witnesses.end()));
    }

    void dfs(std::size_t i) {
        if (chosen_ == p_.e) {
            leaf();
            return;
        }
        if (p_.e - chosen_ > pairs_.size() - i) return;

        const std::size_t mark = cliques_.size();
        add(pairs_[i]);
        if (cliques_.size() > out_.best || (cliques_.size() > mark && !tau_at_most(p_.s))) {
            ++out_.pruned;
        } else {
            dfs(i + 1);
        }
        remove(pairs_[i], mark);

        dfs(i + 1);
    }

    const SearchParams& p_;
    const std::vector<Pair>& pairs_;
    const std::vector<std::vector<Mask>>& subsets_;
    std::vector<Mask> adj_;
    std::vector<Mask> cliques_;
    std::size_t chosen_ = 0;
    PartitionResult out_;
};

std::uint64_t code_under(const Graph& g, const std::vector<Vertex>& order) {
    // Bit order follows graph6: pairs (i, j), i < j, by j then i, first pair most significant.
    std::uint64_t code = 0;
    const std::size_t n = order.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1U : 0U);
    return code;
}

}  // namespace

unsigned default_workers() {
    if (const char* env = std::getenv("RADEMACHER_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

Graph canonical_form(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kHardMaxN) throw std::invalid_argument("canonical_form supports at most 11 vertices");

    // Vertices are ordered by (degree, sorted neighbor degrees); only ties are permuted.
    std::vector<std::vector<std::size_t>> key(n);
    for (Vertex v = 0; v < n; ++v) {
        key[v].push_back(g.degree(v));
        std::vector<std::size_t> nd;
        for (Vertex w : g.neighbors(v)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        key[v].insert(key[v].end(), nd.begin(), nd.end());
    }
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return key[a] < key[b]; });

    std::vector<std::pair<std::size_t, std::size_t>> classes;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i + 1;
        while (j < n && key[order[j]] == key[order[i]]) ++j;
        if (j - i > 1) classes.emplace_back(i, j);
        i = j;
    }

    std::vector<Vertex> best_order = order;
    std::uint64_t best_code = code_under(g, order);
    // Odometer over the permutations of every class.
    while (true) {
        std::size_t c = 0;
        for (; c < classes.size(); ++c) {
            auto [lo, hi] = classes[c];
            if (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi))) break;
        }
        if (c == classes.size()) break;
        const std::uint64_t code = code_under(g, order);
        if (code < best_code) {
            best_code = code;
            best_order = order;
        }
    }

    std::vector<Vertex> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[best_order[i]] = static_cast<Vertex>(i);
    return g.relabeled(perm);
}

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

SearchReport brute_min_cliques(const SearchParams& params) {
    if (params.n > params.max_n || params.n > kHardMaxN) {
        throw SearchRefused("search over n=" + std::to_string(params.n) + " exceeds the cap n <= " +
                            std::to_string(std::min(params.max_n, kHardMaxN)));
    }
    if (params.n == 0) throw SearchRefused("search needs n >= 1");
    if (params.k < 2) throw SearchRefused("search needs k >= 2");
    const std::size_t total_pairs = params.n * (params.n - 1) / 2;
    if (params.e > total_pairs) {
        throw SearchRefused("e=" + std::to_string(params.e) + " exceeds n(n-1)/2=" + std::to_string(total_pairs));
    }

    std::vector<Pair> pairs;
    for (Vertex u = 0; u < params.n; ++u)
        for (Vertex v = u + 1; v < params.n; ++v) pairs.push_back({u, v});

    std::vector<std::vector<Mask>> subsets(params.n + 1);
    for (Mask m = 0; m < (Mask{1} << params.n); ++m) subsets[static_cast<std::size_t>(std::popcount(m))].push_back(m);

    const std::size_t depth = std::min(kPrefixDepth, pairs.size());
    const std::size_t partitions = std::size_t{1} << depth;
    std::vector<PartitionResult> results(partitions);

    const unsigned workers = params.workers == 0 ? default_workers() : params.workers;
    detail::parallel_for(partitions, workers, [&](std::size_t i) {
        PartitionSearch search(params, pairs, subsets);
        // Prefix bits are read most significant first; all-ones is the lexicographically first edge set.
        results[i] = search.run(partitions - 1 - i, depth);
    });

    SearchReport report;
    report.params = params;
    report.partitions = partitions;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (const auto& r : results) {
        report.graphs_scanned += r.scanned;
        report.pruned += r.pruned;
        best = std::min(best, r.best);
    }
    if (best != std::numeric_limits<std::uint64_t>::max()) {
        report.minimum = CopyCount{best};
        std::set<std::string> merged;
        for (const auto& r : results)
            if (r.best == best) merged.insert(r.witnesses.begin(), r.witnesses.end());
        for (const auto& w : merged) {
            if (report.witnesses.size() == params.witness_cap) break;
            report.witnesses.push_back(w);
        }
    }
    return report;
}

nlohmann::json to_json(const SearchReport& r) {
    nlohmann::json j = {
        {"parameters", {{"n", r.params.n}, {"e", r.params.e}, {"k", r.params.k}, {"s", r.params.s}}},
        {"witnesses", r.witnesses},
        {"graphs_scanned", r.graphs_scanned},
        {"pruned", r.pruned},
        {"partitions", r.partitions},
    };
    j["minimum"] = r.minimum ? nlohmann::json(r.minimum->value) : nlohmann::json(nullptr);
    return j;
}

}  // namespace rademacher::oracle
