#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

// Minimal deterministic SVG line charts.  Output is plain text with all
// numbers rendered in shortest round-trip form, so identical input yields
// identical bytes — the property the experiment harness' reproducibility
// checks rely on.

namespace cellmend {

struct SvgSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;  // (x, y)
};

// Renders polylines with axes, tick labels, a legend, and a title.  Axis
// ranges are the min/max over all points, padded by 5% per side (degenerate
// ranges get a unit pad).  Throws std::invalid_argument when no series is
// given, a series has fewer than two points, or any coordinate is not
// finite; std::runtime_error when the file cannot be written.
void emit_svg(const std::vector<SvgSeries>& series, const std::string& x_label,
              const std::string& y_label, const std::string& title,
              const std::filesystem::path& path);

// The emitted markup as a string (what emit_svg writes).
std::string render_svg(const std::vector<SvgSeries>& series,
                       const std::string& x_label, const std::string& y_label,
                       const std::string& title);

}  // namespace cellmend
