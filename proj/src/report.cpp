#include "difflab/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace difflab {

std::string format_double(double x) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

void ExperimentReport::add_row(std::vector<double> row, bool ok) {
    rows.push_back(std::move(row));
    row_pass.push_back(ok);
    if (!ok) pass = false;
}

void ExperimentReport::add_param(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
}

void ExperimentReport::add_param(const std::string& key, double value) {
    params.emplace_back(key, format_double(value));
}

void ExperimentReport::add_param(const std::string& key, std::int64_t value) {
    params.emplace_back(key, std::to_string(value));
}

std::string ExperimentReport::to_csv() const {
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out += columns[c];
        out += ',';
    }
    out += "pass\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (double v : rows[r]) {
            out += format_double(v);
            out += ',';
        }
        out += row_pass[r] ? '1' : '0';
        out += '\n';
    }
    return out;
}

nlohmann::json ExperimentReport::to_json() const {
    nlohmann::json j;
    j["experiment"] = name;
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    nlohmann::json jrows = nlohmann::json::array();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        nlohmann::json row = nlohmann::json::object();
        for (std::size_t c = 0; c < columns.size() && c < rows[r].size(); ++c)
            row[columns[c]] = rows[r][c];
        row["pass"] = static_cast<bool>(row_pass[r]);
        jrows.push_back(row);
    }
    j["rows"] = jrows;
    j["pass"] = pass;
    return j;
}

}  // namespace difflab
