#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_support.hpp"
#include "rademacher/report.hpp"

using namespace rademacher;
using nlohmann::ordered_json;

TEST(Report, EnvelopeOrder) {
    const auto j = report::envelope("search", ordered_json{{"n", 6}}, ordered_json{{"minimum", 3}});
    EXPECT_EQ(j.dump(), R"({"format_version":1,"command":"search","parameters":{"n":6},"minimum":3})");
}

TEST(Report, TableUnionsColumns) {
    const std::vector<ordered_json> rows{{{"n", 1}, {"a", "x"}}, {{"n", 2}, {"b", nullptr}, {"c", ordered_json::array({1, 2})}}};
    const auto t = report::table_from_rows(rows);
    EXPECT_EQ(t.columns, (std::vector<std::string>{"n", "a", "b", "c"}));
    EXPECT_EQ(t.rows[0], (std::vector<std::string>{"1", "x", "", ""}));
    EXPECT_EQ(t.rows[1], (std::vector<std::string>{"2", "", "", "[1,2]"}));
    EXPECT_EQ(report::to_csv(t), "n,a,b,c\n1,x,,\n2,,,\"[1,2]\"\n");
}

TEST(Report, CsvQuoting) {
    report::Table t{{"a"}, {{"he said \"hi\""}, {"x\ny"}, {"plain"}}};
    EXPECT_EQ(report::to_csv(t), "a\n\"he said \"\"hi\"\"\"\n\"x\ny\"\nplain\n");
}

TEST(Report, SweepJson) {
    oracle::SweepGrid g;
    g.n = {100, 100, 1};
    g.s = {10, 10, 1};
    g.t = oracle::IntRange::single(1);
    const auto r = oracle::theorem_sweep(oracle::Target::Conjectures, g);
    const auto j = report::sweep_json(r, g);
    EXPECT_EQ(j.at("format_version"), 1);
    EXPECT_EQ(j.at("command"), "verify");
    EXPECT_EQ(j.at("target"), "conjectures");
    EXPECT_FALSE(j.at("parameters").contains("workers"));
    ASSERT_FALSE(j.at("rows").empty());
    EXPECT_TRUE(j.at("rows")[0].contains("status"));
}

TEST(CliSupport, ParseRange) {
    const auto a = cli::parse_range("20..200");
    EXPECT_EQ(a.lo, 20);
    EXPECT_EQ(a.hi, 200);
    EXPECT_EQ(a.step, 1);
    const auto b = cli::parse_range("12..60:3");
    EXPECT_EQ(b.step, 3);
    EXPECT_EQ(b.values().size(), 17u);
    EXPECT_EQ(cli::parse_range("7").values(), std::vector<std::int64_t>{7});
    EXPECT_THROW(cli::parse_range("9..3"), std::invalid_argument);
    EXPECT_THROW(cli::parse_range("1..5:0"), std::invalid_argument);
    EXPECT_THROW(cli::parse_range("a..5"), std::invalid_argument);
    EXPECT_THROW(cli::parse_range("1..5x"), std::invalid_argument);
}

TEST(CliSupport, ParseIntList) {
    EXPECT_EQ(cli::parse_int_list("20,41,60"), (std::vector<std::int64_t>{20, 41, 60}));
    EXPECT_THROW(cli::parse_int_list("20,,60"), std::invalid_argument);
}

TEST(CliSupport, Formats) {
    for (auto f : {cli::Format::Json, cli::Format::Csv, cli::Format::Graph6}) EXPECT_EQ(cli::parse_format(cli::format_name(f)), f);
    EXPECT_THROW(cli::parse_format("xml"), std::invalid_argument);
}

TEST(CliSupport, Validate) {
    cli::RunConfig cfg;
    cfg.command = "verify";
    EXPECT_NO_THROW(cli::validate(cfg));
    cfg.format = cli::Format::Graph6;
    EXPECT_THROW(cli::validate(cfg), std::invalid_argument);
    cfg.format = cli::Format::Csv;
    cfg.grid.k = oracle::IntRange::single(2);
    EXPECT_THROW(cli::validate(cfg), std::invalid_argument);
    cfg.grid.k = oracle::IntRange::single(4);
    cfg.budget = 0;
    EXPECT_THROW(cli::validate(cfg), std::invalid_argument);
}

TEST(CliSupport, EmitToFile) {
    const auto path = std::filesystem::temp_directory_path() / "rademacher_emit_test.txt";
    cli::RunConfig cfg;
    cfg.out = path.string();
    cli::emit(cfg, "abc\n");
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), "abc\n");
    std::filesystem::remove(path);
}

TEST(Report, SweepTableEndsWithStatus) {
    oracle::SweepGrid g;
    g.n = {12, 60, 48};
    g.s = oracle::IntRange::single(11);
    g.gap = 3;
    const auto t = report::sweep_table(oracle::theorem_sweep(oracle::Target::Theorem3, g));
    ASSERT_GE(t.columns.size(), 2u);
    EXPECT_EQ(t.columns[t.columns.size() - 2], "status");
    EXPECT_EQ(t.columns.back(), "detail");
    ASSERT_EQ(t.rows.size(), 2u);
    EXPECT_EQ(t.rows[0][t.columns.size() - 2], "infeasible");
    EXPECT_EQ(t.rows[1][t.columns.size() - 2], "pass");
}
