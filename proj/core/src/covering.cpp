#include "rademacher/covering.hpp"

#include <algorithm>
#include <limits>

#include "rademacher/counting.hpp"

namespace rademacher::cover {
namespace {

class BranchAndBound {
public:
    BranchAndBound(std::size_t n, std::span<const std::vector<Vertex>> copies)
        : copies_(copies), incident_(n), hits_(copies.size(), 0), allowed_(n, 1), mark_(n, 0) {
        for (std::size_t c = 0; c < copies.size(); ++c)
            for (Vertex v : copies[c]) incident_[v].push_back(c);
    }

    CoverResult run() {
        CoverResult out;
        out.copies = copies_.size();
        best_ = greedy_hitting_set();

        std::vector<std::vector<Vertex>> packing = root_packing();
        if (packing.size() < best_.size()) search();

        out.tau = best_.size();
        out.witness = best_;
        std::sort(out.witness.begin(), out.witness.end());
        if (packing.size() == out.tau) out.certificate = std::move(packing);
        out.nodes = nodes_;
        return out;
    }

private:
    std::vector<Vertex> greedy_hitting_set() const {
        std::vector<char> covered(copies_.size(), 0);
        std::vector<Vertex> chosen;
        std::size_t left = copies_.size();
        while (left > 0) {
            Vertex pick = 0;
            std::size_t most = 0;
            for (Vertex v = 0; v < incident_.size(); ++v) {
                std::size_t c = 0;
                for (std::size_t id : incident_[v]) c += covered[id] ? 0 : 1;
                if (c > most) {
                    most = c;
                    pick = v;
                }
            }
            chosen.push_back(pick);
            for (std::size_t id : incident_[pick]) {
                if (!covered[id]) {
                    covered[id] = 1;
                    --left;
                }
            }
        }
        return chosen;
    }

    std::vector<std::vector<Vertex>> root_packing() {
        std::vector<std::vector<Vertex>> out;
        std::fill(mark_.begin(), mark_.end(), 0);
        for (const auto& c : copies_) {
            if (std::any_of(c.begin(), c.end(), [&](Vertex v) { return mark_[v] != 0; })) continue;
            for (Vertex v : c) mark_[v] = 1;
            out.push_back(c);
        }
        return out;
    }

    std::size_t allowed_count(const std::vector<Vertex>& c) const {
        std::size_t a = 0;
        for (Vertex v : c) a += allowed_[v];
        return a;
    }

    // Disjoint uncovered copies, counted on allowed vertices only.
    std::size_t packing_bound() {
        std::fill(mark_.begin(), mark_.end(), 0);
        std::size_t count = 0;
        for (std::size_t id = 0; id < copies_.size(); ++id) {
            if (hits_[id] != 0) continue;
            const auto& c = copies_[id];
            bool free = true;
            for (Vertex v : c) {
                if (allowed_[v] && mark_[v]) {
                    free = false;
                    break;
                }
            }
            if (!free) continue;
            for (Vertex v : c)
                if (allowed_[v]) mark_[v] = 1;
            ++count;
        }
        return count;
    }

    void choose(Vertex v, int delta) {
        for (std::size_t id : incident_[v]) hits_[id] += delta;
    }

    void search() {
        ++nodes_;
        // Branch on the uncovered copy with fewest allowed vertices; ties go to the lowest index.
        std::size_t branch = std::numeric_limits<std::size_t>::max();
        std::size_t fewest = std::numeric_limits<std::size_t>::max();
        for (std::size_t id = 0; id < copies_.size(); ++id) {
            if (hits_[id] != 0) continue;
            const std::size_t a = allowed_count(copies_[id]);
            if (a == 0) return;
            if (a < fewest) {
                fewest = a;
                branch = id;
            }
        }
        if (branch == std::numeric_limits<std::size_t>::max()) {
            if (current_.size() < best_.size()) best_ = current_;
            return;
        }
        if (current_.size() + packing_bound() >= best_.size()) return;

        std::vector<Vertex> forbidden;
        for (Vertex v : copies_[branch]) {
            if (!allowed_[v]) continue;
            current_.push_back(v);
            choose(v, +1);
            search();
            choose(v, -1);
            current_.pop_back();
            // Later branches assume v stays out of the cover.
            allowed_[v] = 0;
            forbidden.push_back(v);
            if (current_.size() + 1 >= best_.size()) break;
        }
        for (Vertex v : forbidden) allowed_[v] = 1;
    }

    std::span<const std::vector<Vertex>> copies_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<int> hits_;
    std::vector<char> allowed_;
    std::vector<char> mark_;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
    std::uint64_t nodes_ = 0;
};

Graph delete_vertices(const Graph& g, std::span<const Vertex> gone) {
    std::vector<char> drop(g.order(), 0);
    for (Vertex v : gone) {
        if (v >= g.order()) throw std::invalid_argument("cover vertex out of range");
        drop[v] = 1;
    }
    std::vector<Vertex> index(g.order(), 0);
    Vertex next = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!drop[v]) index[v] = next++;
    Graph out(next);
    for (auto [u, v] : g.edges())
        if (!drop[u] && !drop[v]) out.add_edge(index[u], index[v]);
    return out;
}

}  // namespace

CoverInstance make_instance(const Graph& host, const Graph& pattern, std::uint64_t budget) {
    return {host, pattern, copy_vertex_sets(host, pattern, budget)};
}

bool is_cover(const Graph& g, const Graph& f, std::span<const Vertex> chosen) {
    return count_copies(delete_vertices(g, chosen), f).value == 0;
}

CoverResult solve(const CoverInstance& instance) {
    return BranchAndBound(instance.host.order(), instance.copies).run();
}

CoverResult covering_number(const Graph& g, const Graph& f, std::uint64_t budget) {
    return solve(make_instance(g, f, budget));
}

std::size_t greedy_disjoint_packing(std::span<const std::vector<Vertex>> sets) {
    std::vector<Vertex> used;
    std::size_t count = 0;
    for (const auto& s : sets) {
        if (std::any_of(s.begin(), s.end(), [&](Vertex v) { return std::find(used.begin(), used.end(), v) != used.end(); }))
            continue;
        used.insert(used.end(), s.begin(), s.end());
        ++count;
    }
    return count;
}

nlohmann::json to_json(const CoverResult& r) {
    nlohmann::json j = {
        {"tau", r.tau},
        {"witness", r.witness},
        {"copies", r.copies},
        {"nodes", r.nodes},
    };
    j["lower_bound_certificate"] = r.certificate ? nlohmann::json(*r.certificate) : nlohmann::json(nullptr);
    return j;
}

}  // namespace rademacher::cover
