#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cnls {

/// Outcome of one acceptance check. `criterion` is "AC<n>" optionally
/// followed by ".<detail>", n in 1..10.
struct Verdict {
  std::string criterion;
  bool pass = false;
  double measured = 0.0;
  /// "<=", "<", ">=", ">" or "==": how measured was compared to threshold.
  std::string relation = "<=";
  double threshold = 0.0;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Compares measured against threshold with `relation`.
Verdict make_verdict(std::string criterion, double measured, std::string relation, double threshold);

/// Tabular record of an experiment: header (config echo), numeric rows and verdicts.
class ExperimentReport {
 public:
  explicit ExperimentReport(std::string name = "report");

  const std::string& name() const noexcept { return name_; }

  /// Appends or replaces a header entry. Keys and values must be single-line.
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, double value);
  /// Empty string when absent.
  std::string get(const std::string& key) const;
  const std::vector<std::pair<std::string, std::string>>& header() const noexcept { return header_; }

  void set_columns(std::vector<std::string> columns);
  const std::vector<std::string>& columns() const noexcept { return columns_; }
  /// DimensionError if the row width differs from the column count.
  void add_row(std::vector<double> row);
  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }
  /// ConfigError for an unknown column.
  std::vector<double> column(const std::string& name) const;

  /// ConfigError unless the id names an acceptance criterion.
  void add_verdict(Verdict verdict);
  const std::vector<Verdict>& verdicts() const noexcept { return verdicts_; }
  bool all_pass() const noexcept;
  bool rows_finite() const noexcept;

  /// Appends the rows and verdicts of `other`; columns must agree.
  void append(const ExperimentReport& other);

  friend bool operator==(const ExperimentReport&, const ExperimentReport&);

 private:
  std::string name_;
  std::vector<std::pair<std::string, std::string>> header_;
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
  std::vector<Verdict> verdicts_;
};

/// CSV layout:
///
///     # cnls-report v1
///     # name: <name>
///     # generated: <UTC timestamp>          (omitted when timestamp is empty)
///     # <key>: <value>                      (header entries, in insertion order)
///     # verdict: <id>,<pass|fail>,<measured>,<relation>,<threshold>
///     <col>,<col>,...
///     <rows>
///
/// Numbers use the shortest round-trip form, so read_csv(write_csv(r)) == r.
void write_csv(std::ostream& out, const ExperimentReport& report, const std::string& timestamp);
void write_csv(const std::filesystem::path& path, const ExperimentReport& report,
               const std::string& timestamp);
ExperimentReport read_csv(std::istream& in);
ExperimentReport read_csv(const std::filesystem::path& path);

/// Everything except the timestamp line; identical for identical runs.
std::string csv_body(const ExperimentReport& report);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

}  // namespace cnls
