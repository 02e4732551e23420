#include "cnls/report.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cnls/errors.hpp"
#include "number_format.hpp"

namespace cnls {
namespace {

constexpr const char* kMagic = "# cnls-report v1";

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) parts.push_back(cell);
  if (!line.empty() && line.back() == sep) parts.emplace_back();
  return parts;
}

bool single_line(const std::string& s) { return s.find('\n') == std::string::npos; }

bool known_criterion(const std::string& id) {
  if (id.size() < 3 || id.compare(0, 2, "AC") != 0) return false;
  std::size_t end = 2;
  while (end < id.size() && std::isdigit(static_cast<unsigned char>(id[end]))) ++end;
  if (end == 2) return false;
  const int n = std::stoi(id.substr(2, end - 2));
  return n >= 1 && n <= 10 && (end == id.size() || id[end] == '.');
}

}  // namespace

Verdict make_verdict(std::string criterion, double measured, std::string relation, double threshold) {
  bool pass = false;
  if (relation == "<=") pass = measured <= threshold;
  else if (relation == "<") pass = measured < threshold;
  else if (relation == ">=") pass = measured >= threshold;
  else if (relation == ">") pass = measured > threshold;
  else if (relation == "==") pass = measured == threshold;
  else throw ConfigError("unknown verdict relation '" + relation + "'");
  return Verdict{std::move(criterion), pass, measured, std::move(relation), threshold};
}

ExperimentReport::ExperimentReport(std::string name) : name_(std::move(name)) {}

void ExperimentReport::set(const std::string& key, const std::string& value) {
  if (key.empty() || !single_line(key) || !single_line(value) || key.find(':') != std::string::npos) {
    throw ConfigError("invalid report header entry '" + key + "'");
  }
  if (key == "verdict" || key == "name" || key == "generated") {
    throw ConfigError("report header key '" + key + "' is reserved");
  }
  auto it = std::find_if(header_.begin(), header_.end(), [&](const auto& kv) { return kv.first == key; });
  if (it != header_.end()) it->second = value;
  else header_.emplace_back(key, value);
}

void ExperimentReport::set(const std::string& key, double value) { set(key, detail::format_double(value)); }

std::string ExperimentReport::get(const std::string& key) const {
  for (const auto& [k, v] : header_) {
    if (k == key) return v;
  }
  return {};
}

void ExperimentReport::set_columns(std::vector<std::string> columns) {
  if (!rows_.empty()) throw ConfigError("columns are fixed once rows exist");
  for (const auto& c : columns) {
    if (c.empty() || c.find(',') != std::string::npos || !single_line(c)) {
      throw ConfigError("invalid column name '" + c + "'");
    }
  }
  columns_ = std::move(columns);
}

void ExperimentReport::add_row(std::vector<double> row) {
  if (row.size() != columns_.size()) {
    throw DimensionError("row has " + std::to_string(row.size()) + " values for " +
                         std::to_string(columns_.size()) + " columns");
  }
  rows_.push_back(std::move(row));
}

std::vector<double> ExperimentReport::column(const std::string& name) const {
  const auto it = std::find(columns_.begin(), columns_.end(), name);
  if (it == columns_.end()) throw ConfigError("report has no column '" + name + "'");
  const auto idx = static_cast<std::size_t>(it - columns_.begin());
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r[idx]);
  return out;
}

void ExperimentReport::add_verdict(Verdict verdict) {
  if (!known_criterion(verdict.criterion)) {
    throw ConfigError("verdict '" + verdict.criterion + "' does not name an acceptance criterion");
  }
  verdicts_.push_back(std::move(verdict));
}

bool ExperimentReport::all_pass() const noexcept {
  return std::all_of(verdicts_.begin(), verdicts_.end(), [](const Verdict& v) { return v.pass; });
}

bool ExperimentReport::rows_finite() const noexcept {
  for (const auto& r : rows_) {
    for (double x : r) {
      if (!std::isfinite(x)) return false;
    }
  }
  return true;
}

void ExperimentReport::append(const ExperimentReport& other) {
  if (columns_.empty() && rows_.empty()) columns_ = other.columns_;
  if (other.columns_ != columns_) throw ConfigError("cannot append reports with different columns");
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
  verdicts_.insert(verdicts_.end(), other.verdicts_.begin(), other.verdicts_.end());
}

bool operator==(const ExperimentReport& a, const ExperimentReport& b) {
  if (a.name_ != b.name_ || a.header_ != b.header_ || a.columns_ != b.columns_ ||
      a.verdicts_ != b.verdicts_ || a.rows_.size() != b.rows_.size()) {
    return false;
  }
  // Bitwise comparison so NaN cells compare equal to themselves.
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    if (a.rows_[i].size() != b.rows_[i].size()) return false;
    for (std::size_t j = 0; j < a.rows_[i].size(); ++j) {
      if (detail::format_double(a.rows_[i][j]) != detail::format_double(b.rows_[i][j])) return false;
    }
  }
  return true;
}

void write_csv(std::ostream& out, const ExperimentReport& report, const std::string& timestamp) {
  using detail::format_double;
  out << kMagic << '\n' << "# name: " << report.name() << '\n';
  if (!timestamp.empty()) out << "# generated: " << timestamp << '\n';
  for (const auto& [k, v] : report.header()) out << "# " << k << ": " << v << '\n';
  for (const auto& v : report.verdicts()) {
    out << "# verdict: " << v.criterion << ',' << (v.pass ? "pass" : "fail") << ','
        << format_double(v.measured) << ',' << v.relation << ',' << format_double(v.threshold) << '\n';
  }
  for (std::size_t i = 0; i < report.columns().size(); ++i) {
    out << (i ? "," : "") << report.columns()[i];
  }
  out << '\n';
  for (const auto& row : report.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
}

void write_csv(const std::filesystem::path& path, const ExperimentReport& report,
               const std::string& timestamp) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_csv(out, report, timestamp);
}

ExperimentReport read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kMagic) throw FormatError("missing report magic line");
  if (!std::getline(in, line) || line.rfind("# name: ", 0) != 0) throw FormatError("missing report name");
  ExperimentReport report(line.substr(8));

  bool have_columns = false;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      const auto colon = line.find(": ", 2);
      if (colon == std::string::npos) throw FormatError("bad header line: " + line);
      const std::string key = line.substr(2, colon - 2);
      const std::string value = line.substr(colon + 2);
      if (key == "generated") continue;
      if (key == "verdict") {
        const auto cells = split(value, ',');
        if (cells.size() != 5 || (cells[1] != "pass" && cells[1] != "fail")) {
          throw FormatError("bad verdict line: " + line);
        }
        report.add_verdict(Verdict{cells[0], cells[1] == "pass", detail::parse_double(cells[2]),
                                   cells[3], detail::parse_double(cells[4])});
      } else {
        report.set(key, value);
      }
      continue;
    }
    if (!have_columns) {
      report.set_columns(split(line, ','));
      have_columns = true;
      continue;
    }
    if (line.empty()) continue;
    std::vector<double> row;
    for (const auto& cell : split(line, ',')) row.push_back(detail::parse_double(cell));
    report.add_row(std::move(row));
  }
  if (!have_columns) throw FormatError("report has no column header");
  return report;
}

ExperimentReport read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_csv(in);
}

std::string csv_body(const ExperimentReport& report) {
  std::ostringstream out;
  write_csv(out, report, "");
  return out.str();
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace cnls
