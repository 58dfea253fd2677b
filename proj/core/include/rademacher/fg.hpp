#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rademacher/formulas.hpp"

// Case analysis comparing f(m_st) with min_m g(m) over the valid removal counts m.
namespace rademacher::oracle {

using StPair = std::pair<std::int64_t, std::int64_t>;

struct FgCaseRow {
    std::int64_t s = 0;
    std::int64_t t = 0;
    formulas::Parity parity = formulas::Parity::Even;
    std::int64_t m_st = 0;
    std::int64_t f_at_mst = 0;  // doubled; offset form unless a concrete n was given
    std::int64_t g_min = 0;
    std::vector<std::int64_t> g_argmins;
    bool holds = false;           // f(m_st) <= min g
    bool unique_argmin = false;   // g is minimized only at m_st
    bool tight_elsewhere = false; // some m != m_st has g(m) = f(m_st)
};

/// Every 1 <= t < s <= s_max and both parities, in (s, t, parity) order, offsets doubled.
std::vector<FgCaseRow> verify_fg(std::int64_t s_max);

/// The same comparison with the full doubled values 2f, 2g at a concrete n (rows for n's parity only).
std::vector<FgCaseRow> verify_fg_at(std::int64_t s_max, std::int64_t n);

/// Pairs (s, t) whose row is tight elsewhere, ascending.
std::vector<StPair> tight_pairs(const std::vector<FgCaseRow>& rows, formulas::Parity parity);
/// Pairs (s, t) whose g minimum is not uniquely at m_st, ascending.
std::vector<StPair> non_unique_pairs(const std::vector<FgCaseRow>& rows, formulas::Parity parity);

/// The exceptional (s, t) lists published with the triangle theorem.
std::vector<StPair> published_exceptional_pairs(formulas::Parity parity);

nlohmann::json to_json(const FgCaseRow& row);

}  // namespace rademacher::oracle
