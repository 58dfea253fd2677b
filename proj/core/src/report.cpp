#include "rademacher/report.hpp"

#include <algorithm>
#include <map>

namespace rademacher::report {

using oj = nlohmann::ordered_json;

oj envelope(std::string_view command, oj parameters, oj body) {
    oj j;
    j["format_version"] = kFormatVersion;
    j["command"] = std::string(command);
    j["parameters"] = std::move(parameters);
    for (auto& [key, val] : body.items()) j[key] = val;
    return j;
}

std::string cell_text(const oj& v) {
    if (v.is_null()) return {};
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

Table table_from_rows(const std::vector<oj>& rows) {
    Table t;
    std::map<std::string, std::size_t> index;
    for (const auto& r : rows)
        for (const auto& [key, val] : r.items())
            if (index.emplace(key, t.columns.size()).second) t.columns.push_back(key);
    for (const auto& r : rows) {
        std::vector<std::string> cells(t.columns.size());
        for (const auto& [key, val] : r.items()) cells[index.at(key)] = cell_text(val);
        t.rows.push_back(std::move(cells));
    }
    return t;
}

namespace {

std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void append_line(std::string& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out += ',';
        out += quote(cells[i]);
    }
    out += '\n';
}

}  // namespace

std::string to_csv(const Table& t) {
    std::string out;
    append_line(out, t.columns);
    for (const auto& r : t.rows) append_line(out, r);
    return out;
}

std::vector<oj> sweep_rows(const oracle::SweepReport& r) {
    std::vector<oj> out;
    out.reserve(r.rows.size());
    for (const auto& row : r.rows) {
        oj j = row.values;
        j["status"] = std::string(oracle::status_name(row.status));
        j["detail"] = row.detail;
        out.push_back(std::move(j));
    }
    return out;
}

Table sweep_table(const oracle::SweepReport& r) {
    std::vector<oj> values;
    values.reserve(r.rows.size());
    for (const auto& row : r.rows) values.push_back(row.values);
    Table t = table_from_rows(values);
    t.columns.push_back("status");
    t.columns.push_back("detail");
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        t.rows[i].push_back(std::string(oracle::status_name(r.rows[i].status)));
        t.rows[i].push_back(r.rows[i].detail);
    }
    return t;
}

oj sweep_json(const oracle::SweepReport& r, const oracle::SweepGrid& grid) {
    oj params = oracle::grid_to_json(grid);
    oj body;
    body["target"] = std::string(oracle::target_name(r.target));
    body["ok"] = r.ok();
    body["summary"] = r.summary;
    body["rows"] = sweep_rows(r);
    return envelope("verify", std::move(params), std::move(body));
}

}  // namespace rademacher::report
