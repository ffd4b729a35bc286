#include "periodica/chart_svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

namespace periodica {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMarginLeft = 72.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 24.0;
constexpr double kMarginBottom = 48.0;

struct Series {
  const char* label;
  const char* color;
  std::vector<std::pair<double, double>> points;
};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Data space to pixel space; SVG y grows downward, data y grows upward.
struct Mapper {
  double x0, x1, y0, y1;

  double x(double v) const {
    return kMarginLeft +
           (v - x0) / (x1 - x0) * (kWidth - kMarginLeft - kMarginRight);
  }
  double y(double v) const {
    return kHeight - kMarginBottom -
           (v - y0) / (y1 - y0) * (kHeight - kMarginTop - kMarginBottom);
  }
};

void emit_axes(std::ostream& os, const Mapper& m) {
  const double left = m.x(m.x0), right = m.x(m.x1);
  const double bottom = m.y(m.y0), top = m.y(m.y1);
  os << "<line x1='" << num(left) << "' y1='" << num(bottom) << "' x2='"
     << num(right) << "' y2='" << num(bottom)
     << "' stroke='#444' stroke-width='1'/>\n"
     << "<line x1='" << num(left) << "' y1='" << num(bottom) << "' x2='"
     << num(left) << "' y2='" << num(top)
     << "' stroke='#444' stroke-width='1'/>\n";

  const int ticks = 6;
  for (int i = 0; i <= ticks; ++i) {
    const double fx = m.x0 + (m.x1 - m.x0) * i / ticks;
    const double px = m.x(fx);
    os << "<line x1='" << num(px) << "' y1='" << num(bottom) << "' x2='"
       << num(px) << "' y2='" << num(bottom + 5)
       << "' stroke='#444' stroke-width='1'/>\n"
       << "<text x='" << num(px) << "' y='" << num(bottom + 20)
       << "' font-size='12' text-anchor='middle' fill='#222' "
          "font-family='sans-serif'>"
       << num(std::round(fx)) << "</text>\n";

    const double fy = m.y0 + (m.y1 - m.y0) * i / ticks;
    const double py = m.y(fy);
    os << "<line x1='" << num(left - 5) << "' y1='" << num(py) << "' x2='"
       << num(left) << "' y2='" << num(py)
       << "' stroke='#444' stroke-width='1'/>\n"
       << "<text x='" << num(left - 9) << "' y='" << num(py + 4)
       << "' font-size='12' text-anchor='end' fill='#222' "
          "font-family='sans-serif'>"
       << num(fy) << "</text>\n";
  }
  os << "<text x='" << num((left + right) / 2) << "' y='"
     << num(kHeight - 10)
     << "' font-size='13' text-anchor='middle' fill='#222' "
        "font-family='sans-serif'>n</text>\n";
}

void emit_series(std::ostream& os, const Mapper& m, const Series& s) {
  if (s.points.empty()) return;
  os << "<polyline fill='none' stroke='" << s.color
     << "' stroke-width='1.5' points='";
  for (const auto& [px, py] : s.points)
    os << num(m.x(px)) << ',' << num(m.y(py)) << ' ';
  os << "'/>\n";
}

void emit_legend(std::ostream& os, const std::vector<Series>& series) {
  double y = kMarginTop + 16.0;
  const double x = kWidth - kMarginRight - 190.0;
  for (const Series& s : series) {
    if (s.points.empty()) continue;
    os << "<line x1='" << num(x) << "' y1='" << num(y - 4) << "' x2='"
       << num(x + 26) << "' y2='" << num(y - 4) << "' stroke='" << s.color
       << "' stroke-width='2'/>\n"
       << "<text x='" << num(x + 32) << "' y='" << num(y)
       << "' font-size='12' fill='#222' font-family='sans-serif'>" << s.label
       << "</text>\n";
    y += 17.0;
  }
}

}  // namespace

void write_bounds_svg(std::ostream& os, std::span<const BoundsRow> rows) {
  std::vector<Series> series{
      {"normalized", "#1f4e9c", {}},     {"new_upper", "#c03021", {}},
      {"go_upper", "#777777", {}},       {"go_lower", "#aaaaaa", {}},
      {"rr_lower", "#2b8a3e", {}},       {"counting_bound_norm", "#b56a00", {}},
      {"delta_upper", "#7048a8", {}},
  };

  for (const BoundsRow& r : rows) {
    const double n = static_cast<double>(r.n);
    if (r.normalized) series[0].points.emplace_back(n, *r.normalized);
    series[1].points.emplace_back(n, r.new_upper);
    series[2].points.emplace_back(n, r.go_upper);
    series[3].points.emplace_back(n, r.go_lower);
    if (r.rr_lower) series[4].points.emplace_back(n, *r.rr_lower);
    series[5].points.emplace_back(n, r.counting_norm);
    series[6].points.emplace_back(n, r.delta_upper);
  }

  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -ymin;
  double xmin = ymin, xmax = -ymin;
  for (const Series& s : series)
    for (const auto& [px, py] : s.points) {
      xmin = std::min(xmin, px);
      xmax = std::max(xmax, px);
      ymin = std::min(ymin, py);
      ymax = std::max(ymax, py);
    }
  if (!(xmin < xmax)) xmax = xmin + 1.0;
  if (!(ymin < ymax)) ymax = ymin + 1.0;
  const double pad = (ymax - ymin) * 0.05;
  const Mapper m{xmin, xmax, ymin - pad, ymax + pad};

  os << "<svg xmlns='http://www.w3.org/2000/svg' viewBox='0 0 800 600' "
        "width='800' height='600'>\n"
     << "<rect x='0' y='0' width='800' height='600' fill='white'/>\n";
  emit_axes(os, m);
  for (const Series& s : series) emit_series(os, m, s);
  emit_legend(os, series);
  os << "</svg>\n";
}

}  // namespace periodica
