#include "meridian/grid.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "meridian/errors.hpp"

namespace meridian {

GridSpec grid_over(const SurfacePatch& patch, int u_samples, int v_samples) {
  GridSpec g{patch.u_range, patch.v_range, u_samples, v_samples};
  validate_grid(g, patch);
  return g;
}

void validate_grid(const GridSpec& grid, const SurfacePatch& patch) {
  if (grid.u_samples < 2 || grid.v_samples < 2) throw UsageError("grid needs at least 2 samples per axis");
  if (!patch.u_range.contains(grid.u_range) || !patch.v_range.contains(grid.v_range)) {
    std::ostringstream os;
    os << "grid [" << grid.u_range.lo << ", " << grid.u_range.hi << "] x [" << grid.v_range.lo << ", "
       << grid.v_range.hi << "] is not inside the domain of '" << patch.label << "' ([" << patch.u_range.lo << ", "
       << patch.u_range.hi << "] x [" << patch.v_range.lo << ", " << patch.v_range.hi << "])";
    throw UsageError(os.str());
  }
}

namespace {

double parse_real(std::string_view s, std::string_view whole) {
  double x = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, x);
  if (ec != std::errc{} || ptr != end || !std::isfinite(x)) {
    throw UsageError("invalid number '" + std::string(s) + "' in grid axis '" + std::string(whole) + "'");
  }
  return x;
}

}  // namespace

GridAxis parse_grid_axis(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ':') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 3) throw UsageError("grid axis must be start:end:count, got '" + std::string(text) + "'");
  GridAxis axis;
  axis.range = {parse_real(parts[0], text), parse_real(parts[1], text)};
  const double n = parse_real(parts[2], text);
  if (n != std::floor(n) || n < 2 || n > 1e7) {
    throw UsageError("grid axis count must be an integer >= 2, got '" + std::string(parts[2]) + "'");
  }
  if (!(axis.range.hi > axis.range.lo)) throw UsageError("grid axis needs start < end, got '" + std::string(text) + "'");
  axis.samples = static_cast<int>(n);
  return axis;
}

}  // namespace meridian
