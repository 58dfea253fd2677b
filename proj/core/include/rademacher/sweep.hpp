#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rademacher/covering.hpp"
#include "rademacher/graph.hpp"

// Grid sweeps that build the extremal constructions, count them exactly and
// compare against the closed forms. One row per grid point (and family).
namespace rademacher::oracle {

enum class Target { Fact, Theorem1, Theorem2, Theorem3, Theorem4, Fg, Opt, Conjectures };

std::string_view target_name(Target t);
Target parse_target(std::string_view name);

/// Inclusive range lo, lo+step, ..., up to hi.
struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::int64_t step = 1;

    std::vector<std::int64_t> values() const;
    static IntRange single(std::int64_t v) { return {v, v, 1}; }
};

struct SweepGrid {
    IntRange n{20, 20, 1};
    IntRange s{2, 2, 1};
    /// Defaults to 1..s-1 per point.
    std::optional<IntRange> t;
    /// Fixes t = s - gap; overrides t.
    std::optional<std::int64_t> gap;
    IntRange k{4, 4, 1};
    IntRange m{0, 1, 1};
    /// Vertex counts at which the covering number is computed.
    std::vector<std::int64_t> tau_ns;
    std::optional<Graph> pattern;
    std::uint64_t budget = cover::kDefaultCopyBudget;
    unsigned workers = 0;
};

enum class RowStatus { Pass, Fail, Infeasible, Report, Budget };
std::string_view status_name(RowStatus s);

struct SweepRow {
    nlohmann::ordered_json values;
    RowStatus status = RowStatus::Report;
    std::string detail;
};

struct SweepReport {
    Target target = Target::Fact;
    std::vector<SweepRow> rows;
    /// Target-wide checks and aggregates (exceptional lists, fitted constants, ...).
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    bool summary_failed = false;

    std::size_t count(RowStatus s) const;
    bool ok() const { return !summary_failed && count(RowStatus::Fail) == 0; }
};

/// Throws std::invalid_argument when the grid is malformed or lacks a needed field.
SweepReport theorem_sweep(Target target, const SweepGrid& grid);

nlohmann::ordered_json grid_to_json(const SweepGrid& grid);

}  // namespace rademacher::oracle
