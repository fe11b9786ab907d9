#include "cellmend/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "cellmend/csv.hpp"

namespace cellmend {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 560.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 170.0;  // room for the legend
constexpr double kMarginTop = 50.0;
constexpr double kMarginBottom = 60.0;

constexpr std::array<const char*, 6> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

Range padded(double lo, double hi) {
  if (lo == hi) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

// Pixel coordinates, y inverted (SVG grows downward).
double map_x(double v, const Range& r) {
  return kMarginLeft +
         (v - r.lo) / (r.hi - r.lo) * (kWidth - kMarginLeft - kMarginRight);
}

double map_y(double v, const Range& r) {
  return kHeight - kMarginBottom -
         (v - r.lo) / (r.hi - r.lo) * (kHeight - kMarginTop - kMarginBottom);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string num(double v) { return format_double(v); }

}  // namespace

std::string render_svg(const std::vector<SvgSeries>& series,
                       const std::string& x_label, const std::string& y_label,
                       const std::string& title) {
  if (series.empty()) {
    throw std::invalid_argument("svg: need at least one series");
  }
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo;
  double y_lo = x_lo;
  double y_hi = -x_lo;
  for (const auto& s : series) {
    if (s.points.size() < 2) {
      throw std::invalid_argument("svg: series '" + s.name +
                                  "' needs at least two points");
    }
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) {
        throw std::invalid_argument("svg: non-finite point in series '" +
                                    s.name + "'");
      }
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  const Range xr = padded(x_lo, x_hi);
  const Range yr = padded(y_lo, y_hi);

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) +
         " " + num(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"28\" font-size=\"18\" "
         "text-anchor=\"middle\" font-family=\"sans-serif\">" +
         escape(title) + "</text>\n";

  // Axes.
  const double x0 = kMarginLeft;
  const double x1 = kWidth - kMarginRight;
  const double y0 = kHeight - kMarginBottom;
  const double y1 = kMarginTop;
  svg += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" +
         num(x1) + "\" y2=\"" + num(y0) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" +
         num(x0) + "\" y2=\"" + num(y1) + "\" stroke=\"black\"/>\n";

  // Five ticks per axis with numeric labels.
  for (int i = 0; i <= 4; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / 4.0;
    const double px = map_x(fx, xr);
    svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(y0) + "\" x2=\"" +
           num(px) + "\" y2=\"" + num(y0 + 6) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(px) + "\" y=\"" + num(y0 + 22) +
           "\" font-size=\"12\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\">" +
           num(std::round(fx * 1000.0) / 1000.0) + "</text>\n";

    const double fy = yr.lo + (yr.hi - yr.lo) * i / 4.0;
    const double py = map_y(fy, yr);
    svg += "<line x1=\"" + num(x0 - 6) + "\" y1=\"" + num(py) + "\" x2=\"" +
           num(x0) + "\" y2=\"" + num(py) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(x0 - 10) + "\" y=\"" + num(py + 4) +
           "\" font-size=\"12\" text-anchor=\"end\" "
           "font-family=\"sans-serif\">" +
           num(std::round(fy * 1000.0) / 1000.0) + "</text>\n";
  }

  // Axis labels.
  svg += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num(kHeight - 16) +
         "\" font-size=\"14\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\">" +
         escape(x_label) + "</text>\n";
  svg += "<text x=\"20\" y=\"" + num((y0 + y1) / 2) +
         "\" font-size=\"14\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" transform=\"rotate(-90 20 " +
         num((y0 + y1) / 2) + ")\">" +
         escape(y_label) + "</text>\n";

  // Polylines.
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % kPalette.size()];
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& [x, y] : series[s].points) {
      if (!first) svg += ' ';
      first = false;
      svg += num(map_x(x, xr)) + "," + num(map_y(y, yr));
    }
    svg += "\"/>\n";
  }

  // Legend.
  const double lx = x1 + 14;
  for (std::size_t s = 0; s < series.size(); ++s) {
    const double ly = y1 + 10 + 22.0 * static_cast<double>(s);
    const char* color = kPalette[s % kPalette.size()];
    svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" +
           num(lx + 24) + "\" y2=\"" + num(ly) + "\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(lx + 30) + "\" y=\"" + num(ly + 4) +
           "\" font-size=\"12\" font-family=\"sans-serif\">" +
           escape(series[s].name) + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

void emit_svg(const std::vector<SvgSeries>& series, const std::string& x_label,
              const std::string& y_label, const std::string& title,
              const std::filesystem::path& path) {
  const std::string text = render_svg(series, x_label, y_label, title);
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw std::runtime_error("svg: cannot open for writing: " + path.string());
  }
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) {
    throw std::runtime_error("svg: write failed: " + path.string());
  }
}

}  // namespace cellmend
