#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rademacher/sweep.hpp"

namespace rademacher::report {

inline constexpr int kFormatVersion = 1;

/// {"format_version", "command", "parameters", ...body}.
nlohmann::ordered_json envelope(std::string_view command, nlohmann::ordered_json parameters, nlohmann::ordered_json body);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// Columns are the union of row keys in first-seen order; missing cells are empty.
Table table_from_rows(const std::vector<nlohmann::ordered_json>& rows);

/// RFC 4180 quoting, "\n" line ends.
std::string to_csv(const Table& t);

/// Scalar cell text: strings verbatim, null as empty, everything else as compact JSON.
std::string cell_text(const nlohmann::ordered_json& v);

/// Each row's values followed by status and detail columns.
std::vector<nlohmann::ordered_json> sweep_rows(const oracle::SweepReport& r);
/// Union of value columns, then status and detail.
Table sweep_table(const oracle::SweepReport& r);
nlohmann::ordered_json sweep_json(const oracle::SweepReport& r, const oracle::SweepGrid& grid);

}  // namespace rademacher::report
