#include "cli_support.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace rademacher::cli {
namespace {

std::int64_t parse_int(std::string_view text) {
    std::int64_t v = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    return v;
}

}  // namespace

Format parse_format(std::string_view text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    if (text == "graph6") return Format::Graph6;
    throw std::invalid_argument("unknown format '" + std::string(text) + "', expected json, csv or graph6");
}

std::string_view format_name(Format f) {
    switch (f) {
        case Format::Json: return "json";
        case Format::Csv: return "csv";
        case Format::Graph6: return "graph6";
    }
    return "?";
}

oracle::IntRange parse_range(std::string_view text) {
    oracle::IntRange r;
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        r.lo = r.hi = parse_int(text);
        return r;
    }
    r.lo = parse_int(text.substr(0, dots));
    std::string_view rest = text.substr(dots + 2);
    if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
        r.step = parse_int(rest.substr(colon + 1));
        rest = rest.substr(0, colon);
    }
    r.hi = parse_int(rest);
    if (r.step < 1) throw std::invalid_argument("range step must be >= 1 in '" + std::string(text) + "'");
    if (r.lo > r.hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
    return r;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
    std::vector<std::int64_t> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        out.push_back(parse_int(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

void validate(const RunConfig& cfg) {
    const auto& g = cfg.grid;
    for (const auto* r : {&g.n, &g.s, &g.k, &g.m}) (void)r->values();
    if (g.t) (void)g.t->values();
    if (g.n.lo < 1) throw std::invalid_argument("n must be >= 1");
    if (g.s.lo < 1) throw std::invalid_argument("s must be >= 1");
    if (g.k.lo < 3) throw std::invalid_argument("k must be >= 3");
    if (g.gap && *g.gap < 1) throw std::invalid_argument("gap must be >= 1");
    if (cfg.budget == 0) throw std::invalid_argument("budget must be positive");
    if (cfg.command == "verify" && cfg.format == Format::Graph6) {
        throw std::invalid_argument("verify writes json or csv");
    }
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + cfg.out + "' for writing");
    file << text;
}

}  // namespace rademacher::cli
