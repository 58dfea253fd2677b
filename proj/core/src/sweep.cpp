#include "rademacher/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "rademacher/coloring.hpp"
#include "rademacher/constructions.hpp"
#include "rademacher/counting.hpp"
#include "rademacher/critical.hpp"
#include "rademacher/fg.hpp"
#include "rademacher/formulas.hpp"
#include "rademacher/graph6.hpp"
#include "rademacher/opt.hpp"
#include "rademacher/search.hpp"

#include "parallel.hpp"

namespace rademacher::oracle {
namespace {

using oj = nlohmann::ordered_json;
using build::Family;
using build::InfeasibleConstruction;

std::int64_t as_int(CopyCount c) {
    if (c.value > static_cast<std::uint64_t>(INT64_MAX)) throw CountOverflow("count exceeds int64 range");
    return static_cast<std::int64_t>(c.value);
}

oj parts_json(const PartVector& p) { return std::vector<std::int64_t>(p.sizes().begin(), p.sizes().end()); }

std::vector<std::int64_t> t_values(const SweepGrid& g, std::int64_t s) {
    std::vector<std::int64_t> out;
    if (g.gap) {
        if (s - *g.gap >= 1 && *g.gap >= 1) out.push_back(s - *g.gap);
        return out;
    }
    if (g.t) {
        for (std::int64_t t : g.t->values())
            if (t >= 1 && t < s) out.push_back(t);
        return out;
    }
    for (std::int64_t t = 1; t < s; ++t) out.push_back(t);
    return out;
}

bool wants_tau(const SweepGrid& g, std::int64_t n) {
    return std::find(g.tau_ns.begin(), g.tau_ns.end(), n) != g.tau_ns.end();
}

SweepRow finish(oj v, bool ok, std::string detail = {}) {
    return {std::move(v), ok ? RowStatus::Pass : RowStatus::Fail, std::move(detail)};
}

// Adds the covering number to v; returns false when it differs from `expected`.
// A refused instance marks the row as over budget.
bool check_tau(const SweepGrid& g, const Graph& host, const Graph& pattern, std::int64_t expected, oj& v,
               bool& over_budget) {
    try {
        const auto r = cover::covering_number(host, pattern, g.budget);
        v["tau"] = r.tau;
        v["tau_certified"] = r.certificate.has_value();
        return static_cast<std::int64_t>(r.tau) == expected;
    } catch (const BudgetExceeded&) {
        v["tau"] = nullptr;
        over_budget = true;
        return true;
    }
}

SweepRow fact_row(const SweepGrid& g, std::int64_t n, std::int64_t s, std::int64_t t, Family fam) {
    oj v;
    v["family"] = std::string(build::family_name(fam));
    v["n"] = n;
    v["s"] = s;
    v["t"] = t;
    build::Construction c;
    try {
        c = fam == Family::BM ? build::bm_graph(n, s, t) : build::bs_graph(n, s, t);
    } catch (const InfeasibleConstruction& e) {
        return {v, RowStatus::Infeasible, e.what()};
    }
    const auto p = formulas::triangle_params(n, s, t);
    const std::int64_t bm_value = s * p.n_minus - p.m_st;
    const std::int64_t e_expected = formulas::turan_edge_count(n, 2) + t;
    const std::int64_t n_expected = fam == Family::BM ? bm_value : bm_value + formulas::surplus(n, s, t);
    const auto e = static_cast<std::int64_t>(edge_count(c.graph));
    const std::int64_t count = as_int(count_cliques(c.graph, 3));
    v["m_st"] = p.m_st;
    v["e"] = e;
    v["e_expected"] = e_expected;
    v["N3"] = count;
    v["N3_expected"] = n_expected;
    v["side_condition"] = build::side_condition_holds(c.spec);
    bool ok = e == e_expected && count == n_expected && build::side_condition_holds(c.spec);
    bool over = false;
    if (wants_tau(g, n)) ok = check_tau(g, c.graph, complete_graph(3), s, v, over) && ok;
    if (over && ok) return {v, RowStatus::Budget, "covering number over budget"};
    return finish(v, ok);
}

SweepRow theorem1_row(std::int64_t n, std::int64_t s, std::int64_t t) {
    oj v{{"n", n}, {"s", s}, {"t", t}};
    const std::int64_t bound = formulas::triangle_lower_bound(n, s, t);
    v["bound"] = bound;
    std::optional<std::int64_t> bm;
    std::optional<std::int64_t> bs;
    std::string why;
    try {
        bm = as_int(count_cliques(build::bm_graph(n, s, t).graph, 3));
    } catch (const InfeasibleConstruction& e) {
        why = e.what();
    }
    try {
        bs = as_int(count_cliques(build::bs_graph(n, s, t).graph, 3));
    } catch (const InfeasibleConstruction&) {
    }
    v["N3_bm"] = bm ? oj(*bm) : oj(nullptr);
    v["N3_bs"] = bs ? oj(*bs) : oj(nullptr);
    if (!bm) return {v, RowStatus::Infeasible, why};
    const std::int64_t best = bs ? std::min(*bm, *bs) : *bm;
    v["attained"] = best == bound;
    return finish(v, best == bound && (!bs || *bs >= bound));
}

SweepRow theorem2_row(const SweepGrid& g, std::int64_t k, std::int64_t n, std::int64_t s) {
    const std::int64_t t = s - 1;
    oj v{{"k", k}, {"n", n}, {"s", s}, {"t", t}};
    const auto d = formulas::divide_parts(n, k);
    v["r"] = d.r;
    build::Construction c;
    try {
        const PartVector y = formulas::y_vector(n, k);
        v["parts"] = parts_json(y);
        c = build::km_graph(y, d.r == 1 ? 1 : 0, s);
    } catch (const std::invalid_argument& e) {
        return {v, RowStatus::Infeasible, e.what()};
    }
    const std::int64_t expected = formulas::min_kk_count(n, k, s);
    const std::int64_t e_expected = formulas::turan_edge_count(n, k - 1) + t;
    const auto e = static_cast<std::int64_t>(edge_count(c.graph));
    const std::int64_t count = as_int(count_cliques(c.graph, static_cast<std::size_t>(k)));
    v["m"] = c.spec.params.m;
    v["e"] = e;
    v["e_expected"] = e_expected;
    v["Nk"] = count;
    v["Nk_expected"] = expected;
    bool ok = e == e_expected && count == expected;
    if (s == 2) {
        try {
            const auto box = build::t_box(n, k);
            const std::int64_t box_count = as_int(count_cliques(box.graph, static_cast<std::size_t>(k)));
            const std::int64_t conj = formulas::conjecture2_bound(n, k);
            v["Nk_t_box"] = box_count;
            v["conjecture2_bound"] = conj;
            ok = ok && box_count == conj && box_count == expected;
        } catch (const InfeasibleConstruction& e) {
            v["Nk_t_box"] = nullptr;
        }
    }
    bool over = false;
    if (wants_tau(g, n)) ok = check_tau(g, c.graph, complete_graph(static_cast<std::size_t>(k)), s, v, over) && ok;
    if (over && ok) return {v, RowStatus::Budget, "covering number over budget"};
    return finish(v, ok);
}

SweepRow theorem3_row(const SweepGrid& g, std::int64_t k, std::int64_t n, std::int64_t s, std::int64_t t) {
    oj v{{"k", k}, {"n", n}, {"s", s}, {"t", t}};
    const auto p = formulas::clique_params(n, k, s, t);
    v["r"] = p.r;
    v["R_k"] = p.r_k.to_string();
    v["n_minus"] = p.n_minus.to_string();
    v["large_s"] = p.large_s;
    build::Construction c;
    try {
        c = build::km_special(n, k, s, t);
    } catch (const InfeasibleConstruction& e) {
        return {v, RowStatus::Infeasible, e.what()};
    }
    const std::int64_t nm = *p.n_minus_natural;
    const std::int64_t expected = checked_mul(s, checked_pow(nm, k - 2));
    const std::int64_t e_expected = formulas::turan_edge_count(n, k - 1) + t;
    const auto e = static_cast<std::int64_t>(edge_count(c.graph));
    const std::int64_t count = as_int(count_cliques(c.graph, static_cast<std::size_t>(k)));
    v["parts"] = parts_json(c.spec.parts);
    v["e"] = e;
    v["e_expected"] = e_expected;
    v["Nk"] = count;
    v["Nk_expected"] = expected;
    bool ok = e == e_expected && count == expected;
    bool over = false;
    if (wants_tau(g, n)) ok = check_tau(g, c.graph, complete_graph(static_cast<std::size_t>(k)), s, v, over) && ok;
    if (over && ok) return {v, RowStatus::Budget, "covering number over budget"};
    return finish(v, ok);
}

SweepRow theorem4_row(const SweepGrid& g, std::int64_t n, std::int64_t s) {
    const Graph& f = *g.pattern;
    const int chi = chromatic_number(f);
    oj v{{"pattern", to_graph6(f)}, {"n", n}, {"s", s}, {"chi", chi}};
    build::Construction c;
    try {
        c = build::turan_plus_matching(n, chi - 1, s);
    } catch (const InfeasibleConstruction& e) {
        return {v, RowStatus::Infeasible, e.what()};
    }
    const CnF cn = c_of_nF(n, f);
    const std::int64_t count = as_int(count_copies(c.graph, f));
    const std::int64_t main = checked_mul(s, as_int(cn.value));
    const double scale = std::pow(static_cast<double>(n), static_cast<double>(f.order()) - 3.0);
    v["c_nF"] = cn.value.value;
    v["NF"] = count;
    v["s_c_nF"] = main;
    v["excess"] = count - main;
    v["residual"] = static_cast<double>(count - main) / scale;
    return {v, RowStatus::Report, {}};
}

SweepRow opt_row(std::int64_t k, std::int64_t n, std::int64_t s, std::int64_t t, std::int64_t m) {
    oj v{{"k", k}, {"n", n}, {"s", s}, {"t", t}, {"m", m}};
    const auto a = opt_enumerate({n, k, s, t, m, Objective::A});
    const auto d = opt_enumerate({n, k, s, t, m, Objective::D});
    const std::int64_t deficit = s - t - m;
    v["square_sum"] = a.square_sum;
    v["feasible"] = a.feasible;
    if (!a.min_tail_product) return {v, RowStatus::Infeasible, "no composition meets the square-sum constraint"};
    v["min_tail_product"] = *a.min_tail_product;
    v["tail_argmin"] = parts_json(*a.tail_argmin);
    v["value_A"] = *a.value;
    v["argmin_A"] = parts_json(*a.argmin);
    v["value_D"] = *d.value;
    v["argmin_D"] = parts_json(*d.argmin);
    if (deficit > 1) return {v, RowStatus::Report, {}};
    const std::int64_t expected = closed_form_min_tail_product(n, k, deficit);
    v["expected_tail_product"] = expected;
    return finish(v, expected == *a.min_tail_product);
}

std::vector<SweepRow> conjecture_rows(const SweepGrid& g, std::int64_t n, std::int64_t s) {
    std::vector<SweepRow> out;
    for (std::int64_t t : t_values(g, s)) {
        oj v{{"conjecture", 1}, {"n", n}, {"s", s}, {"t", t}};
        const std::int64_t bound = formulas::conjecture1_bound(n, s, t);
        v["bound"] = bound;
        try {
            const auto c = build::bm_graph(n, s, t);
            const std::int64_t count = as_int(count_cliques(c.graph, 3));
            v["family"] = "bm";
            v["count"] = count;
            v["violated"] = count < bound;
            out.push_back({v, RowStatus::Report, {}});
        } catch (const InfeasibleConstruction& e) {
            out.push_back({v, RowStatus::Infeasible, e.what()});
        }
    }
    return out;
}

SweepRow conjecture2_row(std::int64_t k, std::int64_t n) {
    oj v{{"conjecture", 2}, {"n", n}, {"k", k}};
    const std::int64_t bound = formulas::conjecture2_bound(n, k);
    v["bound"] = bound;
    try {
        const auto c = build::t_box(n, k);
        const std::int64_t count = as_int(count_cliques(c.graph, static_cast<std::size_t>(k)));
        v["family"] = "t-box";
        v["count"] = count;
        v["violated"] = count < bound;
        v["min_kk_count"] = formulas::min_kk_count(n, k, 2);
        return {v, RowStatus::Report, {}};
    } catch (const InfeasibleConstruction& e) {
        return {v, RowStatus::Infeasible, e.what()};
    }
}

oj pairs_json(const std::vector<StPair>& ps) {
    oj out = oj::array();
    for (auto [s, t] : ps) out.push_back({s, t});
    return out;
}

void add_counts(SweepReport& rep) {
    for (RowStatus st : {RowStatus::Pass, RowStatus::Fail, RowStatus::Infeasible, RowStatus::Report, RowStatus::Budget})
        rep.summary[std::string(status_name(st))] = rep.count(st);
}

bool same_columns(const FgCaseRow& a, const FgCaseRow& b) {
    return a.holds == b.holds && a.g_argmins == b.g_argmins && a.unique_argmin == b.unique_argmin &&
           a.tight_elsewhere == b.tight_elsewhere;
}

SweepReport fg_sweep(const SweepGrid& g) {
    SweepReport rep;
    rep.target = Target::Fg;
    const std::int64_t s_max = g.s.hi;
    const auto rows = verify_fg(s_max);
    for (const auto& r : rows) {
        oj v{{"s", r.s},
             {"t", r.t},
             {"parity", r.parity == formulas::Parity::Even ? "even" : "odd"},
             {"m_st", r.m_st},
             {"f_at_mst", r.f_at_mst},
             {"g_min", r.g_min},
             {"g_argmins", r.g_argmins},
             {"holds", r.holds},
             {"unique_argmin", r.unique_argmin},
             {"tight_elsewhere", r.tight_elsewhere}};
        rep.rows.push_back(finish(v, r.holds));
    }
    for (auto parity : {formulas::Parity::Even, formulas::Parity::Odd}) {
        const std::string name = parity == formulas::Parity::Even ? "even" : "odd";
        const auto tight = tight_pairs(rows, parity);
        const auto published = published_exceptional_pairs(parity);
        std::vector<StPair> published_in_range;
        for (auto p : published)
            if (p.first <= s_max) published_in_range.push_back(p);
        rep.summary["tight_elsewhere_" + name] = pairs_json(tight);
        rep.summary["non_unique_argmin_" + name] = pairs_json(non_unique_pairs(rows, parity));
        rep.summary["published_" + name] = pairs_json(published_in_range);
        rep.summary["published_match_" + name] = tight == published_in_range;
        if (tight != published_in_range) rep.summary_failed = true;
    }
    // Full values at concrete n must give the same comparison columns as the offsets.
    bool recheck = true;
    for (std::int64_t n : {1000, 2000, 1001}) {
        std::size_t i = 0;
        for (const auto& full : verify_fg_at(s_max, n)) {
            while (rows[i].parity != full.parity) ++i;
            recheck = recheck && same_columns(rows[i], full);
            ++i;
        }
    }
    rep.summary["full_value_recheck"] = recheck;
    if (!recheck) rep.summary_failed = true;
    return rep;
}

}  // namespace

std::vector<std::int64_t> IntRange::values() const {
    if (step < 1) throw std::invalid_argument("range step must be >= 1");
    if (lo > hi) throw std::invalid_argument("range lower bound exceeds upper bound");
    std::vector<std::int64_t> out;
    for (std::int64_t v = lo; v <= hi; v += step) out.push_back(v);
    return out;
}

std::string_view target_name(Target t) {
    switch (t) {
        case Target::Fact: return "fact";
        case Target::Theorem1: return "theorem1";
        case Target::Theorem2: return "theorem2";
        case Target::Theorem3: return "theorem3";
        case Target::Theorem4: return "theorem4";
        case Target::Fg: return "fg";
        case Target::Opt: return "opt";
        case Target::Conjectures: return "conjectures";
    }
    return "?";
}

Target parse_target(std::string_view name) {
    for (Target t : {Target::Fact, Target::Theorem1, Target::Theorem2, Target::Theorem3, Target::Theorem4, Target::Fg,
                     Target::Opt, Target::Conjectures})
        if (target_name(t) == name) return t;
    throw std::invalid_argument("unknown verify target '" + std::string(name) + "'");
}

std::string_view status_name(RowStatus s) {
    switch (s) {
        case RowStatus::Pass: return "pass";
        case RowStatus::Fail: return "fail";
        case RowStatus::Infeasible: return "infeasible";
        case RowStatus::Report: return "report";
        case RowStatus::Budget: return "budget";
    }
    return "?";
}

std::size_t SweepReport::count(RowStatus s) const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [s](const SweepRow& r) { return r.status == s; }));
}

SweepReport theorem_sweep(Target target, const SweepGrid& grid) {
    if (grid.n.lo < 1) throw std::invalid_argument("n must be >= 1");
    if (target == Target::Fg) {
        if (grid.s.hi < 2) throw std::invalid_argument("fg needs s_max >= 2");
        auto rep = fg_sweep(grid);
        add_counts(rep);
        return rep;
    }

    std::vector<std::function<std::vector<SweepRow>()>> tasks;
    const auto ns = grid.n.values();
    const auto ss = grid.s.values();
    const auto ks = grid.k.values();
    switch (target) {
        case Target::Fact:
        case Target::Theorem1:
            for (std::int64_t n : ns)
                for (std::int64_t s : ss)
                    for (std::int64_t t : t_values(grid, s)) {
                        if (target == Target::Theorem1) {
                            tasks.emplace_back([=] { return std::vector<SweepRow>{theorem1_row(n, s, t)}; });
                        } else {
                            tasks.emplace_back([=, &grid] {
                                return std::vector<SweepRow>{fact_row(grid, n, s, t, Family::BM),
                                                             fact_row(grid, n, s, t, Family::BS)};
                            });
                        }
                    }
            break;
        case Target::Theorem2:
            for (std::int64_t k : ks) {
                if (k < 4) throw std::invalid_argument("theorem2 needs k >= 4");
                for (std::int64_t n : ns)
                    for (std::int64_t s : ss) {
                        if (s < 2) throw std::invalid_argument("theorem2 needs s >= 2");
                        tasks.emplace_back([=, &grid] { return std::vector<SweepRow>{theorem2_row(grid, k, n, s)}; });
                    }
            }
            break;
        case Target::Theorem3:
            for (std::int64_t k : ks) {
                if (k < 3) throw std::invalid_argument("theorem3 needs k >= 3");
                for (std::int64_t n : ns)
                    for (std::int64_t s : ss)
                        for (std::int64_t t : t_values(grid, s))
                            tasks.emplace_back([=, &grid] { return std::vector<SweepRow>{theorem3_row(grid, k, n, s, t)}; });
            }
            break;
        case Target::Theorem4:
            if (!grid.pattern) throw std::invalid_argument("theorem4 needs a pattern graph");
            for (std::int64_t n : ns)
                for (std::int64_t s : ss)
                    tasks.emplace_back([=, &grid] { return std::vector<SweepRow>{theorem4_row(grid, n, s)}; });
            break;
        case Target::Opt:
            for (std::int64_t k : ks) {
                if (k < 4) throw std::invalid_argument("opt needs k >= 4");
                for (std::int64_t n : ns)
                    for (std::int64_t s : ss)
                        for (std::int64_t t : t_values(grid, s))
                            for (std::int64_t m : grid.m.values())
                                if (m >= 0 && m <= s - t)
                                    tasks.emplace_back([=] { return std::vector<SweepRow>{opt_row(k, n, s, t, m)}; });
            }
            break;
        case Target::Conjectures:
            for (std::int64_t n : ns) {
                for (std::int64_t s : ss)
                    if (s >= 2) tasks.emplace_back([=, &grid] { return conjecture_rows(grid, n, s); });
                for (std::int64_t k : ks)
                    if (k >= 4) tasks.emplace_back([=] { return std::vector<SweepRow>{conjecture2_row(k, n)}; });
            }
            break;
        case Target::Fg:
            break;
    }

    std::vector<std::vector<SweepRow>> results(tasks.size());
    const unsigned workers = grid.workers == 0 ? default_workers() : grid.workers;
    detail::parallel_for(tasks.size(), workers, [&](std::size_t i) { results[i] = tasks[i](); });

    SweepReport rep;
    rep.target = target;
    for (auto& r : results)
        for (auto& row : r) rep.rows.push_back(std::move(row));

    if (target == Target::Theorem4) {
        std::optional<double> c;
        for (const auto& row : rep.rows)
            if (row.status == RowStatus::Report) c = std::max(c.value_or(row.values["residual"].get<double>()), row.values["residual"].get<double>());
        rep.summary["fitted_C"] = c ? oj(*c) : oj(nullptr);
    }
    if (target == Target::Opt) {
        oj mono = oj::array();
        for (std::int64_t k : ks)
            for (std::int64_t n : ns)
                for (std::int64_t s : ss)
                    for (std::int64_t t : t_values(grid, s)) {
                        const auto p = formulas::clique_params(n, k, s, t);
                        if (!p.large_s || p.r != 0 || t != 1) continue;
                        const auto check = opt_monotonicity(n, k, s, t);
                        mono.push_back({{"k", k}, {"n", n}, {"s", s}, {"t", t}, {"ms", check.ms}, {"values", check.values},
                                        {"increasing", check.increasing}});
                    }
        rep.summary["monotonicity"] = mono;
    }
    add_counts(rep);
    return rep;
}

nlohmann::ordered_json grid_to_json(const SweepGrid& grid) {
    const auto range = [](const IntRange& r) { return oj{{"lo", r.lo}, {"hi", r.hi}, {"step", r.step}}; };
    oj j;
    j["n"] = range(grid.n);
    j["s"] = range(grid.s);
    j["t"] = grid.t ? range(*grid.t) : oj(nullptr);
    j["gap"] = grid.gap ? oj(*grid.gap) : oj(nullptr);
    j["k"] = range(grid.k);
    j["m"] = range(grid.m);
    j["tau_n"] = grid.tau_ns;
    j["pattern"] = grid.pattern ? oj(to_graph6(*grid.pattern)) : oj(nullptr);
    j["budget"] = grid.budget;
    return j;
}

}  // namespace rademacher::oracle
