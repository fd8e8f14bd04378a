#include "orbitope/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace orbitope {

std::string format_number(double v) {
    if (v == 0.0) v = 0.0;  // no "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void ReportTable::add_row(std::vector<std::string> row) {
    if (row.size() != columns.size()) throw std::logic_error("row width does not match table " + name);
    rows.push_back(std::move(row));
}

RunReport::RunReport(std::string command) : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

void RunReport::param(const std::string& key, const std::string& value) { params_.emplace_back(key, value); }
void RunReport::param(const std::string& key, double value) { param(key, format_number(value)); }
void RunReport::param(const std::string& key, int value) { param(key, std::to_string(value)); }

void RunReport::outcome(const std::string& key, const std::string& value) { outcomes_.emplace_back(key, value); }
void RunReport::outcome(const std::string& key, double value) { outcome(key, format_number(value)); }
void RunReport::outcome(const std::string& key, int value) { outcome(key, std::to_string(value)); }

bool RunReport::check(const std::string& name, bool ok) {
    checks_.emplace_back(name, ok);
    passed_ = passed_ && ok;
    return ok;
}

ReportTable& RunReport::table(std::string name, std::vector<std::string> columns) {
    tables_.push_back(ReportTable{std::move(name), std::move(columns), {}});
    return tables_.back();
}

std::string RunReport::outcome_value(const std::string& key) const {
    for (const auto& [k, v] : outcomes_) {
        if (k == key) return v;
    }
    throw std::out_of_range("no outcome named " + key);
}

void RunReport::finish() {
    wall_time_ = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

namespace {

void join(std::ostringstream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
}

}  // namespace

std::string RunReport::render(bool with_wall_time) const {
    std::ostringstream os;
    os << "command: " << command_ << '\n';
    for (const auto& [k, v] : params_) os << "param " << k << ": " << v << '\n';
    for (const auto& [k, v] : outcomes_) os << "outcome " << k << ": " << v << '\n';
    for (const auto& [k, ok] : checks_) os << "check " << k << ": " << (ok ? "pass" : "fail") << '\n';
    for (const auto& t : tables_) {
        os << "table " << t.name << '\n';
        join(os, t.columns);
        for (const auto& r : t.rows) join(os, r);
        os << "end table\n";
    }
    os << "status: " << (passed_ ? "pass" : "fail") << '\n';
    if (with_wall_time) os << "wall_time: " << format_number(wall_time_) << '\n';
    return os.str();
}

}  // namespace orbitope
