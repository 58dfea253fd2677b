#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rademacher/sweep.hpp"

namespace rademacher::cli {

enum class Format { Json, Csv, Graph6 };

Format parse_format(std::string_view text);
std::string_view format_name(Format f);

/// "a", "a..b" or "a..b:step", inclusive. Throws std::invalid_argument.
oracle::IntRange parse_range(std::string_view text);
/// Comma separated integers, e.g. "20,41,60".
std::vector<std::int64_t> parse_int_list(std::string_view text);

struct RunConfig {
    std::string command;
    oracle::SweepGrid grid;
    Format format = Format::Json;
    std::string out;  // empty: stdout
    unsigned workers = 0;
    std::uint64_t budget = cover::kDefaultCopyBudget;
};

/// Grid bounds and format are checked before any work starts; throws std::invalid_argument.
void validate(const RunConfig& cfg);

/// Writes to cfg.out, or stdout when it is empty.
void emit(const RunConfig& cfg, const std::string& text);

}  // namespace rademacher::cli
