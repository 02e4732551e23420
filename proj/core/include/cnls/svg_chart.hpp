#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace cnls {

struct ChartSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct ChartOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
};

/// Minimal SVG line chart. Non-finite points, and non-positive ones on log axes, are skipped.
std::string render_line_chart(const std::vector<ChartSeries>& series, const ChartOptions& options);
void write_line_chart(const std::filesystem::path& path, const std::vector<ChartSeries>& series,
                      const ChartOptions& options);

}  // namespace cnls
