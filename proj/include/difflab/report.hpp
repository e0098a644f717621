#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace difflab {

/// Tabular record of one seeded experiment run. Rows are deterministic given
/// the parameter record; every verdict is recomputable from the row's numeric
/// columns and the experiment's stated criterion.
struct ExperimentReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;  // ordered
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<bool> row_pass;
    bool pass = true;

    void add_row(std::vector<double> row, bool ok);
    void add_param(const std::string& key, const std::string& value);
    void add_param(const std::string& key, double value);
    void add_param(const std::string& key, std::int64_t value);

    /// Header line with column names plus a trailing pass column, one row per
    /// trial. Deterministic shortest round-trip number formatting.
    std::string to_csv() const;
    nlohmann::json to_json() const;
};

/// Shortest decimal representation that parses back to exactly x.
std::string format_double(double x);

}  // namespace difflab
