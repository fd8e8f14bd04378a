#pragma once

#include <chrono>
#include <deque>
#include <string>
#include <utility>
#include <vector>

namespace orbitope {

/// printf("%.17g"): enough digits to round-trip any double.
std::string format_number(double v);

struct ReportTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
};

/// Key/value plus tables, rendered as plain text. Everything but the final
/// wall_time line is a deterministic function of the inputs.
///
///     command: roots
///     param k: 3
///     outcome max_deviation: 1.1e-16
///     check bisection_agrees: pass
///     table roots
///     j,index,closed_form,radians,bisection
///     ...
///     end table
///     status: pass
///     wall_time: 0.0012
class RunReport {
public:
    explicit RunReport(std::string command);

    void param(const std::string& key, const std::string& value);
    void param(const std::string& key, double value);
    void param(const std::string& key, int value);

    void outcome(const std::string& key, const std::string& value);
    void outcome(const std::string& key, double value);
    void outcome(const std::string& key, int value);

    /// Records a named check; the report passes only if every check does.
    bool check(const std::string& name, bool ok);

    ReportTable& table(std::string name, std::vector<std::string> columns);

    const std::string& command() const { return command_; }
    bool passed() const { return passed_; }
    const std::vector<std::pair<std::string, std::string>>& outcomes() const { return outcomes_; }
    const std::vector<std::pair<std::string, bool>>& checks() const { return checks_; }
    const std::deque<ReportTable>& tables() const { return tables_; }
    std::string outcome_value(const std::string& key) const;

    void finish();
    double wall_time() const { return wall_time_; }

    std::string render(bool with_wall_time = true) const;

private:
    std::string command_;
    std::vector<std::pair<std::string, std::string>> params_;
    std::vector<std::pair<std::string, std::string>> outcomes_;
    std::vector<std::pair<std::string, bool>> checks_;
    std::deque<ReportTable> tables_;  // stable references from table()
    bool passed_ = true;
    std::chrono::steady_clock::time_point start_;
    double wall_time_ = 0.0;
};

}  // namespace orbitope
