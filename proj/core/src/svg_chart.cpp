#include "cnls/svg_chart.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "cnls/errors.hpp"

namespace cnls {
namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 420;
constexpr double kLeft = 70;
constexpr double kRight = 220;
constexpr double kTop = 40;
constexpr double kBottom = 50;
constexpr std::array<const char*, 6> kColors{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

bool usable(double v, bool log) { return std::isfinite(v) && (!log || v > 0.0); }
double axis(double v, bool log) { return log ? std::log10(v) : v; }

}  // namespace

std::string render_line_chart(const std::vector<ChartSeries>& series, const ChartOptions& options) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!usable(s.x[i], options.log_x) || !usable(s.y[i], options.log_y)) continue;
      const double ax = axis(s.x[i], options.log_x), ay = axis(s.y[i], options.log_y);
      x0 = std::min(x0, ax); x1 = std::max(x1, ax);
      y0 = std::min(y0, ay); y1 = std::max(y1, ay);
    }
  }
  if (!(x0 <= x1)) { x0 = 0; x1 = 1; y0 = 0; y1 = 1; }
  if (x1 == x0) { x0 -= 0.5; x1 += 0.5; }
  if (y1 == y0) { y0 -= 0.5; y1 += 0.5; }

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double v) { return kLeft + (v - x0) / (x1 - x0) * pw; };
  auto py = [&](double v) { return kTop + (1.0 - (v - y0) / (y1 - y0)) * ph; };

  std::ostringstream svg;
  svg.precision(6);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << escape(options.title) << "</text>\n"
      << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int t = 0; t <= 4; ++t) {
    const double fx = x0 + (x1 - x0) * t / 4.0;
    const double fy = y0 + (y1 - y0) * t / 4.0;
    const double lx = options.log_x ? std::pow(10.0, fx) : fx;
    const double ly = options.log_y ? std::pow(10.0, fy) : fy;
    svg << "<text x=\"" << px(fx) << "\" y=\"" << kTop + ph + 16 << "\" text-anchor=\"middle\">" << lx << "</text>\n"
        << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(fy) + 4 << "\" text-anchor=\"end\">" << ly << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 10 << "\" text-anchor=\"middle\">"
      << escape(options.x_label) << "</text>\n"
      << "<text x=\"16\" y=\"" << kTop + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << kTop + ph / 2 << ")\">" << escape(options.y_label) << "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kColors[s % kColors.size()];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    const auto& ser = series[s];
    for (std::size_t i = 0; i < std::min(ser.x.size(), ser.y.size()); ++i) {
      if (!usable(ser.x[i], options.log_x) || !usable(ser.y[i], options.log_y)) continue;
      svg << px(axis(ser.x[i], options.log_x)) << ',' << py(axis(ser.y[i], options.log_y)) << ' ';
    }
    svg << "\"/>\n";
    const double ly = kTop + 14 + 18.0 * static_cast<double>(s);
    svg << "<line x1=\"" << kWidth - kRight + 10 << "\" y1=\"" << ly << "\" x2=\"" << kWidth - kRight + 30
        << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << kWidth - kRight + 36 << "\" y=\"" << ly + 4 << "\">" << escape(ser.label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_line_chart(const std::filesystem::path& path, const std::vector<ChartSeries>& series,
                      const ChartOptions& options) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << render_line_chart(series, options);
}

}  // namespace cnls
