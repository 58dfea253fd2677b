#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "rademacher/constructions.hpp"
#include "rademacher/counting.hpp"
#include "rademacher/covering.hpp"
#include "rademacher/formulas.hpp"
#include "rademacher/graph6.hpp"
#include "rademacher/report.hpp"
#include "rademacher/search.hpp"

using namespace rademacher;
using oj = nlohmann::ordered_json;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;

struct ConstructArgs {
    std::string family;
    std::int64_t n = 0;
    std::int64_t k = 4;
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::int64_t m = 0;
    std::string parts;
    bool no_cover = false;
};

struct VerifyArgs {
    std::string target;
    std::string n, s, t, k, m, tau_n, pattern;
    std::int64_t gap = 0;
    std::int64_t smax = 0;
};

struct SearchArgs {
    std::size_t n = 0, e = 0, k = 3, s = 0, max_n = 8, cap = 16;
};

struct GraphArgs {
    std::string host, pattern;
    std::size_t k = 0;
};

Graph read_graph(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw std::invalid_argument("cannot read '" + arg.substr(1) + "'");
        std::string line;
        std::getline(in, line);
        return from_graph6(line);
    }
    return from_graph6(arg);
}

Graph pattern_of(const GraphArgs& a) {
    if (!a.pattern.empty()) return read_graph(a.pattern);
    if (a.k >= 1) return complete_graph(a.k);
    throw std::invalid_argument("give --pattern or --k");
}

PartVector parse_parts(const std::string& text) {
    const auto v = cli::parse_int_list(text);
    return PartVector(std::vector<std::int64_t>(v.begin(), v.end()));
}

std::int64_t as_i64(CopyCount c) { return static_cast<std::int64_t>(c.value); }

int run_construct(const ConstructArgs& a, cli::RunConfig& cfg) {
    const build::Family fam = build::parse_family(a.family);
    build::Construction c;
    std::size_t clique = 3;
    oj expected;
    switch (fam) {
        case build::Family::BM:
        case build::Family::BS: {
            c = fam == build::Family::BM ? build::bm_graph(a.n, a.s, a.t) : build::bs_graph(a.n, a.s, a.t);
            const auto p = formulas::triangle_params(a.n, a.s, a.t);
            const std::int64_t bm_value = a.s * p.n_minus - p.m_st;
            expected["m_st"] = p.m_st;
            expected["n_plus"] = p.n_plus;
            expected["n_minus"] = p.n_minus;
            expected["surplus"] = formulas::surplus(a.n, a.s, a.t);
            expected["edges"] = formulas::turan_edge_count(a.n, 2) + a.t;
            expected["cliques"] = fam == build::Family::BM ? bm_value : bm_value + formulas::surplus(a.n, a.s, a.t);
            expected["covering_number"] = a.s;
            expected["triangle_lower_bound"] = formulas::triangle_lower_bound(a.n, a.s, a.t);
            expected["conjecture1_bound"] = formulas::conjecture1_bound(a.n, a.s, a.t);
            break;
        }
        case build::Family::KM: {
            const PartVector x = parse_parts(a.parts);
            c = build::km_graph(x, a.m, a.s);
            clique = x.parts() + 1;
            expected["edges"] = x.cross_pairs() + a.s - a.m;
            expected["cliques"] = a.s * x.product(1, x.parts()) - a.m * x.product(1, x.parts() - 1);
            break;
        }
        case build::Family::KMSpecial: {
            c = build::km_special(a.n, a.k, a.s, a.t);
            clique = static_cast<std::size_t>(a.k);
            const auto p = formulas::clique_params(a.n, a.k, a.s, a.t);
            expected["R_k"] = p.r_k.to_string();
            expected["n_minus"] = p.n_minus.to_string();
            expected["n_plus"] = p.n_plus.to_string();
            expected["large_s"] = p.large_s;
            expected["edges"] = formulas::turan_edge_count(a.n, a.k - 1) + a.t;
            expected["cliques"] = checked_mul(a.s, checked_pow(*p.n_minus_natural, a.k - 2));
            expected["covering_number"] = a.s;
            break;
        }
        case build::Family::TBox:
            c = build::t_box(a.n, a.k);
            clique = static_cast<std::size_t>(a.k);
            expected["edges"] = formulas::turan_edge_count(a.n, a.k - 1) + 1;
            expected["cliques"] = formulas::conjecture2_bound(a.n, a.k);
            break;
        case build::Family::Turan: {
            const std::int64_t parts = a.parts.empty() ? a.k - 1 : cli::parse_int_list(a.parts).at(0);
            c = build::turan_graph(a.n, parts);
            clique = static_cast<std::size_t>(parts + 1);
            expected["edges"] = formulas::turan_edge_count(a.n, parts);
            expected["cliques"] = 0;
            break;
        }
        case build::Family::CompleteMultipartite: {
            const PartVector x = parse_parts(a.parts);
            c = build::complete_multipartite(x);
            clique = x.parts() + 1;
            expected["edges"] = x.cross_pairs();
            expected["cliques"] = 0;
            break;
        }
    }

    const std::string g6 = to_graph6(c.graph);
    const auto edges = static_cast<std::int64_t>(edge_count(c.graph));
    const std::int64_t cliques = as_i64(count_cliques(c.graph, clique));
    oj computed{{"vertices", c.graph.order()}, {"edges", edges}, {"clique_size", clique}, {"cliques", cliques}};
    bool ok = edges == expected["edges"].get<std::int64_t>() && cliques == expected["cliques"].get<std::int64_t>();
    if (!a.no_cover) {
        try {
            const auto r = cover::covering_number(c.graph, complete_graph(clique), cfg.budget);
            computed["covering_number"] = r.tau;
            if (expected.contains("covering_number"))
                ok = ok && static_cast<std::int64_t>(r.tau) == expected["covering_number"].get<std::int64_t>();
        } catch (const BudgetExceeded& e) {
            computed["covering_number"] = nullptr;
            computed["covering_note"] = e.what();
        }
    }
    computed["side_condition"] = build::side_condition_holds(c.spec);
    ok = ok && build::side_condition_holds(c.spec);

    oj params{{"family", a.family}, {"n", a.n}, {"k", a.k}, {"s", a.s}, {"t", a.t}, {"m", a.m}, {"parts", a.parts}};
    oj body;
    body["ok"] = ok;
    body["spec"] = oj::parse(build::to_json(c.spec).dump());
    body["graph6"] = g6;
    body["computed"] = computed;
    body["expected"] = expected;
    const oj doc = report::envelope("construct", params, body);

    if (cfg.format == cli::Format::Csv) throw std::invalid_argument("construct writes json or graph6");
    if (!cfg.out.empty()) {
        cli::RunConfig g6cfg = cfg;
        g6cfg.out = cfg.out + ".g6";
        cli::emit(g6cfg, g6 + "\n");
        cli::RunConfig jcfg = cfg;
        jcfg.out = cfg.out + ".json";
        cli::emit(jcfg, doc.dump(2) + "\n");
    } else if (cfg.format == cli::Format::Graph6) {
        cli::emit(cfg, g6 + "\n");
    } else {
        cli::emit(cfg, doc.dump(2) + "\n");
    }
    return ok ? 0 : kExitFailed;
}

oracle::SweepGrid verify_defaults(oracle::Target target) {
    oracle::SweepGrid g;
    using oracle::IntRange;
    using oracle::Target;
    switch (target) {
        case Target::Fact:
            g.n = {20, 200, 1};
            g.s = {2, 8, 1};
            g.tau_ns = {20, 41, 60};
            break;
        case Target::Theorem1:
            g.n = {20, 200, 1};
            g.s = {2, 8, 1};
            break;
        case Target::Theorem2:
            g.k = IntRange::single(4);
            g.n = {12, 60, 1};
            g.s = {2, 5, 1};
            break;
        case Target::Theorem3:
            g.k = IntRange::single(4);
            g.n = {12, 60, 3};
            g.s = {11, 14, 1};
            g.gap = 3;
            g.tau_ns = {60};
            break;
        case Target::Theorem4:
            g.n = {10, 40, 5};
            g.s = {2, 4, 1};
            g.pattern = complete_graph(3);
            break;
        case Target::Fg:
            g.s = {2, 19, 1};
            break;
        case Target::Opt:
            g.k = {4, 5, 1};
            g.n = {12, 40, 1};
            g.s = IntRange::single(2);
            g.t = IntRange::single(1);
            g.m = {0, 1, 1};
            break;
        case Target::Conjectures:
            g.n = IntRange::single(100);
            g.s = IntRange::single(10);
            g.t = IntRange::single(1);
            g.k = IntRange::single(4);
            break;
    }
    return g;
}

int run_verify(const VerifyArgs& a, cli::RunConfig& cfg) {
    const oracle::Target target = oracle::parse_target(a.target);
    oracle::SweepGrid g = verify_defaults(target);
    if (!a.n.empty()) g.n = cli::parse_range(a.n);
    if (!a.s.empty()) g.s = cli::parse_range(a.s);
    if (!a.t.empty()) g.t = cli::parse_range(a.t);
    if (!a.k.empty()) g.k = cli::parse_range(a.k);
    if (!a.m.empty()) g.m = cli::parse_range(a.m);
    if (a.gap > 0) g.gap = a.gap;
    if (a.smax > 0) g.s = {2, a.smax, 1};
    if (!a.tau_n.empty()) g.tau_ns = cli::parse_int_list(a.tau_n);
    if (!a.pattern.empty()) g.pattern = read_graph(a.pattern);
    g.budget = cfg.budget;
    g.workers = cfg.workers;
    cfg.grid = g;
    cli::validate(cfg);

    const auto rep = oracle::theorem_sweep(target, g);
    if (cfg.format == cli::Format::Csv) {
        cli::emit(cfg, report::to_csv(report::sweep_table(rep)));
    } else {
        cli::emit(cfg, report::sweep_json(rep, g).dump(2) + "\n");
    }
    std::cerr << oracle::target_name(target) << ": " << rep.count(oracle::RowStatus::Pass) << " pass, "
              << rep.count(oracle::RowStatus::Fail) << " fail, " << rep.count(oracle::RowStatus::Infeasible)
              << " infeasible, " << rep.count(oracle::RowStatus::Report) << " report, "
              << rep.count(oracle::RowStatus::Budget) << " over budget" << (rep.summary_failed ? ", summary check failed" : "")
              << "\n";
    return rep.ok() ? 0 : kExitFailed;
}

int run_search(const SearchArgs& a, cli::RunConfig& cfg) {
    oracle::SearchParams p;
    p.n = a.n;
    p.e = a.e;
    p.k = a.k;
    p.s = a.s;
    p.max_n = a.max_n;
    p.witness_cap = a.cap;
    p.workers = cfg.workers;
    const auto r = oracle::brute_min_cliques(p);
    if (cfg.format == cli::Format::Graph6) {
        std::string text;
        for (const auto& w : r.witnesses) text += w + "\n";
        cli::emit(cfg, text);
    } else if (cfg.format == cli::Format::Csv) {
        throw std::invalid_argument("search writes json or graph6");
    } else {
        const oj j = oj::parse(oracle::to_json(r).dump());
        oj body;
        for (auto& [key, val] : j.items())
            if (key != "parameters") body[key] = val;
        cli::emit(cfg, report::envelope("search", j["parameters"], body).dump(2) + "\n");
    }
    return 0;
}

int run_cover(const GraphArgs& a, cli::RunConfig& cfg) {
    const Graph host = read_graph(a.host);
    const Graph pattern = pattern_of(a);
    const auto r = cover::covering_number(host, pattern, cfg.budget);
    oj params{{"host", to_graph6(host)}, {"pattern", to_graph6(pattern)}, {"budget", cfg.budget}};
    cli::emit(cfg, report::envelope("cover", params, oj::parse(cover::to_json(r).dump())).dump(2) + "\n");
    return 0;
}

int run_count(const GraphArgs& a, cli::RunConfig& cfg) {
    const Graph host = read_graph(a.host);
    const Graph pattern = pattern_of(a);
    oj params{{"host", to_graph6(host)}, {"pattern", to_graph6(pattern)}};
    oj body{{"vertices", host.order()}, {"edges", edge_count(host)}, {"copies", count_copies(host, pattern).value}};
    cli::emit(cfg, report::envelope("count", params, body).dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extremal graph constructions, exact counts and covering numbers"};
    app.require_subcommand(1);
    app.fallthrough();

    cli::RunConfig cfg;
    std::string format = "json";
    app.add_option("--workers", cfg.workers, "Worker threads (default: RADEMACHER_WORKERS or all cores)");
    app.add_option("--budget", cfg.budget, "Maximum number of copies enumerated by the covering solver");
    app.add_option("--format", format, "Output format: json, csv or graph6");
    app.add_option("--out", cfg.out, "Output path (construct: file prefix); stdout when omitted");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Build a member of an extremal family");
    construct->add_option("family", ca.family, "bm, bs, km, km-special, t-box, turan, complete-multipartite")->required();
    construct->add_option("--n", ca.n, "Vertices");
    construct->add_option("--k", ca.k, "Clique size (km-special, t-box)");
    construct->add_option("--s", ca.s, "Covering number");
    construct->add_option("--t", ca.t, "Edges above the Turan number");
    construct->add_option("--m", ca.m, "Removed cross pairs (km)");
    construct->add_option("--parts", ca.parts, "Part count (turan) or sizes like 5,4,3 (km, complete-multipartite)");
    construct->add_flag("--no-cover", ca.no_cover, "Skip the covering number");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Check closed forms against exact computation over a grid");
    verify->add_option("target", va.target, "fact, theorem1..theorem4, fg, opt, conjectures")->required();
    verify->add_option("--n", va.n, "Range a..b[:step]");
    verify->add_option("--s", va.s, "Range a..b[:step]");
    verify->add_option("--t", va.t, "Range a..b[:step]; default 1..s-1");
    verify->add_option("--gap", va.gap, "Fix t = s - gap");
    verify->add_option("--k", va.k, "Range a..b[:step]");
    verify->add_option("--m", va.m, "Range a..b[:step] (opt)");
    verify->add_option("--smax", va.smax, "Largest s (fg)");
    verify->add_option("--tau-n", va.tau_n, "Comma separated n at which covering numbers are computed");
    verify->add_option("--pattern", va.pattern, "graph6 pattern, or @file (theorem4)");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "Exhaustive minimum clique count at small n");
    search->add_option("--n", sa.n, "Vertices")->required();
    search->add_option("--e", sa.e, "Edges")->required();
    search->add_option("--k", sa.k, "Clique size");
    search->add_option("--s", sa.s, "Covering number")->required();
    search->add_option("--max-n", sa.max_n, "Refuse larger n");
    search->add_option("--witness-cap", sa.cap, "Witnesses kept");

    GraphArgs cover_args;
    auto* cover_cmd = app.add_subcommand("cover", "Exact covering number of a graph6 host");
    cover_cmd->add_option("--host", cover_args.host, "graph6 or @file")->required();
    cover_cmd->add_option("--pattern", cover_args.pattern, "graph6 or @file");
    cover_cmd->add_option("--k", cover_args.k, "Use K_k as the pattern");

    GraphArgs count_args;
    auto* count_cmd = app.add_subcommand("count", "Count copies of a pattern");
    count_cmd->add_option("--host", count_args.host, "graph6 or @file")->required();
    count_cmd->add_option("--pattern", count_args.pattern, "graph6 or @file");
    count_cmd->add_option("--k", count_args.k, "Use K_k as the pattern");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        cfg.format = cli::parse_format(format);
        if (cfg.workers == 0) cfg.workers = oracle::default_workers();
        if (*construct) {
            cfg.command = "construct";
            cli::validate(cfg);
            return run_construct(ca, cfg);
        }
        if (*verify) {
            cfg.command = "verify";
            return run_verify(va, cfg);
        }
        if (*search) {
            cfg.command = "search";
            cli::validate(cfg);
            return run_search(sa, cfg);
        }
        if (*cover_cmd) {
            cfg.command = "cover";
            cli::validate(cfg);
            return run_cover(cover_args, cfg);
        }
        cfg.command = "count";
        cli::validate(cfg);
        return run_count(count_args, cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
}
