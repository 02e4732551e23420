#include "cnls/trajectory_io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cnls/errors.hpp"
#include "number_format.hpp"

namespace cnls {
namespace {

constexpr const char* kMagic = "# cnls-trajectory v1";

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    parts.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

const std::string& require(const std::map<std::string, std::string>& header, const std::string& key) {
  auto it = header.find(key);
  if (it == header.end()) throw FormatError("trajectory header lacks '" + key + "'");
  return it->second;
}

}  // namespace

void write_trajectory(std::ostream& out, const Trajectory& trajectory) {
  using detail::format_double;
  const SolverConfig& cfg = trajectory.config;
  const GridSpec& grid = cfg.grid;
  out << kMagic << '\n'
      << "# n_modes=" << grid.size() << '\n'
      << "# equation=" << to_string(cfg.equation) << '\n'
      << "# gamma=" << format_double(cfg.gamma) << '\n'
      << "# alpha_sq=" << format_double(cfg.alpha_sq) << '\n'
      << "# dt=" << format_double(cfg.dt) << '\n'
      << "# t_end=" << format_double(cfg.t_end) << '\n'
      << "# record_every=" << cfg.record_every << '\n';
  out << 't';
  for (int k = grid.min_mode(); k <= grid.max_mode(); ++k) out << ",re(" << k << "),im(" << k << ')';
  out << '\n';
  for (std::size_t r = 0; r < trajectory.states.size(); ++r) {
    out << format_double(trajectory.times[r]);
    for (const Complex& c : trajectory.states[r].coeffs()) {
      out << ',' << format_double(c.real()) << ',' << format_double(c.imag());
    }
    out << '\n';
  }
}

void write_trajectory(const std::filesystem::path& path, const Trajectory& trajectory) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_trajectory(out, trajectory);
}

Trajectory read_trajectory(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kMagic) throw FormatError("missing trajectory magic line");

  std::map<std::string, std::string> header;
  while (std::getline(in, line) && line.rfind("# ", 0) == 0) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw FormatError("bad header line: " + line);
    header[line.substr(2, eq - 2)] = line.substr(eq + 1);
  }
  if (line.rfind("t,", 0) != 0) throw FormatError("missing column header");

  Trajectory traj;
  try {
    traj.config.grid = GridSpec(std::stoi(require(header, "n_modes")));
    traj.config.equation = parse_equation(require(header, "equation"));
    traj.config.gamma = detail::parse_double(require(header, "gamma"));
    traj.config.alpha_sq = detail::parse_double(require(header, "alpha_sq"));
    traj.config.dt = detail::parse_double(require(header, "dt"));
    traj.config.t_end = detail::parse_double(require(header, "t_end"));
    traj.config.record_every = std::stoi(require(header, "record_every"));
  } catch (const ConfigError& e) {
    throw FormatError(std::string("invalid trajectory header: ") + e.what());
  } catch (const std::logic_error& e) {
    throw FormatError(std::string("invalid trajectory header: ") + e.what());
  }

  const GridSpec grid = traj.config.grid;
  const std::size_t expected = 1 + 2 * static_cast<std::size_t>(grid.size());
  if (split(line, ',').size() != expected) throw FormatError("column header does not match n_modes");

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // A missing final newline means the writer was cut off mid-row.
    if (in.eof()) throw FormatError("last row is not newline-terminated");
    const auto cells = split(line, ',');
    if (cells.size() != expected) {
      throw FormatError("row " + std::to_string(traj.states.size()) + " has " +
                        std::to_string(cells.size()) + " columns, expected " + std::to_string(expected));
    }
    traj.times.push_back(detail::parse_double(cells[0]));
    std::vector<Complex> coeffs(static_cast<std::size_t>(grid.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      coeffs[i] = Complex(detail::parse_double(cells[1 + 2 * i]), detail::parse_double(cells[2 + 2 * i]));
    }
    traj.states.emplace_back(grid, std::move(coeffs));
  }
  if (traj.states.empty()) throw FormatError("trajectory has no rows");
  return traj;
}

Trajectory read_trajectory(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_trajectory(in);
}

}  // namespace cnls
