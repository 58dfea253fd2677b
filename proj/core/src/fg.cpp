#include "rademacher/fg.hpp"

#include <algorithm>
#include <stdexcept>

#include "rademacher/count.hpp"

namespace rademacher::oracle {
namespace {

using formulas::Parity;

FgCaseRow make_row(std::int64_t s, std::int64_t t, Parity parity, std::int64_t base) {
    const auto ms = formulas::valid_removals(s, t, parity);
    FgCaseRow row;
    row.s = s;
    row.t = t;
    row.parity = parity;
    row.m_st = ms.front();
    row.f_at_mst = base + formulas::fg_offsets(s, t, parity, row.m_st).f_doubled;
    std::optional<std::int64_t> g_min;
    std::vector<std::int64_t> gs;
    for (std::int64_t m : ms) {
        const std::int64_t g = base + formulas::fg_offsets(s, t, parity, m).g_doubled;
        gs.push_back(g);
        if (!g_min || g < *g_min) g_min = g;
    }
    row.g_min = *g_min;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (gs[i] == row.g_min) row.g_argmins.push_back(ms[i]);
        if (ms[i] != row.m_st && gs[i] == row.f_at_mst) row.tight_elsewhere = true;
    }
    row.holds = row.f_at_mst <= row.g_min;
    row.unique_argmin = row.g_argmins == std::vector<std::int64_t>{row.m_st};
    return row;
}

std::vector<StPair> select(const std::vector<FgCaseRow>& rows, Parity parity, bool (*pred)(const FgCaseRow&)) {
    std::vector<StPair> out;
    for (const auto& r : rows)
        if (r.parity == parity && pred(r)) out.emplace_back(r.s, r.t);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<FgCaseRow> verify_fg(std::int64_t s_max) {
    if (s_max < 2) throw std::invalid_argument("verify_fg needs s_max >= 2");
    std::vector<FgCaseRow> rows;
    for (std::int64_t s = 2; s <= s_max; ++s)
        for (std::int64_t t = 1; t < s; ++t)
            for (Parity p : {Parity::Even, Parity::Odd}) rows.push_back(make_row(s, t, p, 0));
    return rows;
}

std::vector<FgCaseRow> verify_fg_at(std::int64_t s_max, std::int64_t n) {
    if (s_max < 2) throw std::invalid_argument("verify_fg needs s_max >= 2");
    if (n < 1) throw std::invalid_argument("verify_fg_at needs n >= 1");
    std::vector<FgCaseRow> rows;
    for (std::int64_t s = 2; s <= s_max; ++s)
        for (std::int64_t t = 1; t < s; ++t) rows.push_back(make_row(s, t, formulas::parity_of(n), checked_mul(s, n)));
    return rows;
}

std::vector<StPair> tight_pairs(const std::vector<FgCaseRow>& rows, Parity parity) {
    return select(rows, parity, [](const FgCaseRow& r) { return r.tight_elsewhere; });
}

std::vector<StPair> non_unique_pairs(const std::vector<FgCaseRow>& rows, Parity parity) {
    return select(rows, parity, [](const FgCaseRow& r) { return !r.unique_argmin; });
}

std::vector<StPair> published_exceptional_pairs(Parity parity) {
    if (parity == Parity::Even) return {{2, 1}, {3, 1}, {4, 1}};
    return {{3, 2}, {4, 1}, {5, 1}, {6, 1}};
}

nlohmann::json to_json(const FgCaseRow& row) {
    return {
        {"s", row.s},
        {"t", row.t},
        {"parity", row.parity == Parity::Even ? "even" : "odd"},
        {"m_st", row.m_st},
        {"f_at_mst", row.f_at_mst},
        {"g_min", row.g_min},
        {"g_argmins", row.g_argmins},
        {"holds", row.holds},
        {"unique_argmin", row.unique_argmin},
        {"tight_elsewhere", row.tight_elsewhere},
    };
}

}  // namespace rademacher::oracle
