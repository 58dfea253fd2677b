#include "rademacher/constructions.hpp"

#include <algorithm>
#include <array>

#include "rademacher/counting.hpp"
#include "rademacher/formulas.hpp"

namespace rademacher::build {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::BM, "bm"},
    {Family::BS, "bs"},
    {Family::KM, "km"},
    {Family::KMSpecial, "km-special"},
    {Family::TBox, "t-box"},
    {Family::Turan, "turan"},
    {Family::CompleteMultipartite, "complete-multipartite"},
}};

void require(bool ok, const std::string& what) {
    if (!ok) throw InfeasibleConstruction("infeasible parameters: " + what);
}

std::string ineq(std::string_view lhs, std::int64_t l, std::string_view op, std::string_view rhs, std::int64_t r) {
    return std::string(lhs) + " = " + std::to_string(l) + " " + std::string(op) + " " + std::string(rhs) + " = " +
           std::to_string(r) + " fails";
}

Construction finish(ConstructionSpec spec) {
    Graph g = realize(spec);
    return {std::move(spec), std::move(g)};
}

}  // namespace

std::string_view family_name(Family f) {
    for (auto [fam, name] : kFamilyNames)
        if (fam == f) return name;
    return "unknown";
}

Family parse_family(std::string_view name) {
    for (auto [fam, n] : kFamilyNames)
        if (n == name) return fam;
    throw std::invalid_argument("unknown construction family '" + std::string(name) + "'");
}

std::size_t part_of(const PartVector& parts, Vertex v) {
    std::int64_t end = 0;
    for (std::size_t i = 0; i < parts.parts(); ++i) {
        end += parts[i];
        if (v < end) return i;
    }
    throw std::out_of_range("vertex " + std::to_string(v) + " outside partition");
}

Vertex part_start(const PartVector& parts, std::size_t i) {
    std::int64_t start = 0;
    for (std::size_t j = 0; j < i; ++j) start += parts[j];
    return static_cast<Vertex>(start);
}

Graph realize(const ConstructionSpec& spec) {
    const auto n = static_cast<std::size_t>(spec.parts.total());
    Graph g(n);
    std::vector<std::size_t> part(n);
    for (Vertex v = 0; v < n; ++v) part[v] = part_of(spec.parts, v);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part[v] != part[u]) g.add_edge(u, v);
    for (auto [u, v] : spec.added) {
        if (part_of(spec.parts, u) != part_of(spec.parts, v))
            throw std::invalid_argument("added pair " + std::to_string(u) + "-" + std::to_string(v) + " crosses parts");
        if (g.adjacent(u, v)) throw std::invalid_argument("added pair listed twice");
        g.add_edge(u, v);
    }
    for (auto [u, v] : spec.removed) {
        if (part_of(spec.parts, u) == part_of(spec.parts, v))
            throw std::invalid_argument("removed pair " + std::to_string(u) + "-" + std::to_string(v) + " lies inside a part");
        if (!g.adjacent(u, v)) throw std::invalid_argument("removed pair listed twice");
        g.remove_edge(u, v);
    }
    return g;
}

bool side_condition_holds(const ConstructionSpec& spec) {
    Graph h(static_cast<std::size_t>(spec.parts.total()));
    for (auto [u, v] : spec.added) h.add_edge(u, v);
    for (auto [u, v] : spec.removed) h.add_edge(u, v);
    return count_cliques(h, 3).value == 0;
}

bool added_is_matching(const ConstructionSpec& spec) {
    std::vector<Vertex> ends;
    for (auto [u, v] : spec.added) {
        ends.push_back(u);
        ends.push_back(v);
    }
    std::sort(ends.begin(), ends.end());
    return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

Construction complete_multipartite(const PartVector& parts) {
    ConstructionSpec spec;
    spec.family = Family::CompleteMultipartite;
    spec.params.n = parts.total();
    spec.params.k = static_cast<std::int64_t>(parts.parts()) + 1;
    spec.parts = parts;
    return finish(std::move(spec));
}

Construction turan_graph(std::int64_t n, std::int64_t parts) {
    if (parts < 2) throw std::invalid_argument("Turan graph needs at least 2 parts");
    require(n >= parts, ineq("n", n, ">=", "parts", parts));
    ConstructionSpec spec;
    spec.family = Family::Turan;
    spec.params.n = n;
    spec.params.k = parts + 1;
    spec.parts = balanced_partition(n, parts);
    return finish(std::move(spec));
}

Construction bm_graph(std::int64_t n, std::int64_t s, std::int64_t t) {
    const auto p = formulas::triangle_params(n, s, t);
    require(p.n_plus >= 2 * s, ineq("n+", p.n_plus, ">=", "2s", 2 * s));
    require(p.n_minus >= std::max<std::int64_t>(p.m_st, 1), ineq("n-", p.n_minus, ">=", "max(m_st,1)", std::max<std::int64_t>(p.m_st, 1)));
    ConstructionSpec spec;
    spec.family = Family::BM;
    spec.params = {n, 3, s, t, p.m_st};
    spec.parts = PartVector({p.n_plus, p.n_minus});
    const auto v2 = static_cast<Vertex>(p.n_plus);
    for (Vertex i = 0; i < s; ++i) spec.added.emplace_back(2 * i, 2 * i + 1);
    for (Vertex i = 0; i < p.m_st; ++i) spec.removed.emplace_back(2 * i + 1, v2 + i);
    return finish(std::move(spec));
}

Construction bs_graph(std::int64_t n, std::int64_t s, std::int64_t t) {
    const auto p = formulas::triangle_params(n, s, t);
    require(p.n_plus >= 2 * (s - 1), ineq("n+", p.n_plus, ">=", "2(s-1)", 2 * (s - 1)));
    require(p.n_minus >= 2, ineq("n-", p.n_minus, ">=", "2", 2));
    require(p.m_st <= s - 1, ineq("m_st", p.m_st, "<=", "s-1", s - 1));
    ConstructionSpec spec;
    spec.family = Family::BS;
    spec.params = {n, 3, s, t, p.m_st};
    spec.parts = PartVector({p.n_plus, p.n_minus});
    const auto us = static_cast<Vertex>(p.n_plus);
    const Vertex vs = us + 1;
    for (Vertex i = 0; i + 1 < s; ++i) spec.added.emplace_back(2 * i, 2 * i + 1);
    spec.added.emplace_back(us, vs);
    for (Vertex i = 0; i < p.m_st; ++i) spec.removed.emplace_back(2 * i + 1, vs);
    return finish(std::move(spec));
}

Construction km_graph(const PartVector& x, std::int64_t m, std::int64_t s) {
    require(x.parts() >= 2, "KM needs at least two parts");
    require(s > m && m >= 0, "need s > m >= 0, got s=" + std::to_string(s) + " m=" + std::to_string(m));
    require(x[0] >= 2 * s, ineq("x_1", x[0], ">=", "2s", 2 * s));
    require(x[x.parts() - 1] >= m, ineq("x_{k-1}", x[x.parts() - 1], ">=", "m", m));
    ConstructionSpec spec;
    spec.family = Family::KM;
    spec.params = {x.total(), static_cast<std::int64_t>(x.parts()) + 1, s, 0, m};
    spec.parts = x;
    const Vertex last = part_start(x, x.parts() - 1);
    for (Vertex i = 0; i < s; ++i) spec.added.emplace_back(2 * i, 2 * i + 1);
    for (Vertex i = 0; i < m; ++i) spec.removed.emplace_back(2 * i + 1, last + i);
    return finish(std::move(spec));
}

Construction km_special(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t t) {
    if (k < 4) throw std::invalid_argument("KM(n,k,s,t) needs k >= 4");
    const auto p = formulas::clique_params(n, k, s, t);
    if (!p.n_minus_natural) {
        throw InfeasibleConstruction("infeasible parameters: n-_{k,s,t} = " + p.n_minus.to_string() +
                                     " is not a natural number (radicand R_k^2 = " +
                                     QuadraticSurd::rational(p.scaled_radicand, k - 2).to_string() + ")");
    }
    const std::int64_t nm = *p.n_minus_natural;
    const std::int64_t np = n - (k - 2) * nm;
    require(nm >= 1, ineq("n-", nm, ">=", "1", 1));
    require(np >= 2 * s, ineq("n+", np, ">=", "2s", 2 * s));
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(k - 1), nm);
    sizes.front() = np;
    ConstructionSpec spec;
    spec.family = Family::KMSpecial;
    spec.params = {n, k, s, t, 0};
    spec.parts = PartVector(std::move(sizes));
    for (Vertex i = 0; i < s; ++i) spec.added.emplace_back(2 * i, 2 * i + 1);
    return finish(std::move(spec));
}

Construction t_box(std::int64_t n, std::int64_t k) {
    if (k < 4) throw std::invalid_argument("T_box needs k >= 4");
    require(n >= 2 * (k - 1), ineq("n", n, ">=", "2(k-1)", 2 * (k - 1)));
    ConstructionSpec spec;
    spec.family = Family::TBox;
    spec.params = {n, k, 2, 1, 1};
    spec.parts = balanced_partition(n, k - 1);
    const Vertex b = part_start(spec.parts, 1);
    spec.added = {{0, 1}, {b, b + 1}};
    spec.removed = {{1, b + 1}};
    return finish(std::move(spec));
}

Construction turan_plus_matching(std::int64_t n, std::int64_t parts, std::int64_t s) {
    return km_graph(balanced_partition(n, parts), 0, s);
}

std::vector<Construction> enumerate_bm_patterns(std::int64_t n, std::int64_t s, std::int64_t t, std::size_t limit) {
    const Construction base = bm_graph(n, s, t);
    const std::int64_t m = base.spec.params.m;
    const auto v2 = static_cast<Vertex>(base.spec.parts[0]);
    const auto n_minus = static_cast<Vertex>(base.spec.parts[1]);

    std::vector<Edge> candidates;
    for (Vertex a = 0; a < 2 * s; ++a)
        for (Vertex w = v2; w < v2 + n_minus; ++w) candidates.emplace_back(a, w);

    std::vector<Construction> out;
    std::vector<Edge> chosen;
    // A triangle in added + removed needs both ends of one matching edge removed to a common w.
    auto conflicts = [&](const Edge& e) {
        const Vertex mate = e.first ^ 1U;
        return std::any_of(chosen.begin(), chosen.end(), [&](const Edge& c) { return c.first == mate && c.second == e.second; });
    };
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (out.size() >= limit) return;
        if (static_cast<std::int64_t>(chosen.size()) == m) {
            ConstructionSpec spec = base.spec;
            spec.removed = chosen;
            out.push_back(finish(std::move(spec)));
            return;
        }
        const std::size_t need = static_cast<std::size_t>(m) - chosen.size();
        for (std::size_t i = from; i + need <= candidates.size() && out.size() < limit; ++i) {
            if (conflicts(candidates[i])) continue;
            chosen.push_back(candidates[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

nlohmann::json to_json(const ConstructionSpec& spec) {
    nlohmann::json params = {{"n", spec.params.n}};
    switch (spec.family) {
        case Family::BM:
        case Family::BS:
            params["s"] = spec.params.s;
            params["t"] = spec.params.t;
            params["m"] = spec.params.m;
            break;
        case Family::KM:
            params["k"] = spec.params.k;
            params["s"] = spec.params.s;
            params["m"] = spec.params.m;
            break;
        case Family::KMSpecial:
            params["k"] = spec.params.k;
            params["s"] = spec.params.s;
            params["t"] = spec.params.t;
            break;
        case Family::TBox:
        case Family::Turan:
        case Family::CompleteMultipartite:
            params["k"] = spec.params.k;
            break;
    }
    auto pairs = [](const std::vector<Edge>& es) {
        nlohmann::json a = nlohmann::json::array();
        for (auto [u, v] : es) a.push_back({u, v});
        return a;
    };
    return {
        {"family", family_name(spec.family)},
        {"parameters", params},
        {"parts", std::vector<std::int64_t>(spec.parts.sizes().begin(), spec.parts.sizes().end())},
        {"added", pairs(spec.added)},
        {"removed", pairs(spec.removed)},
    };
}

}  // namespace rademacher::build
