#pragma once

#include <string_view>

#include "meridian/profile.hpp"
#include "meridian/surface.hpp"

namespace meridian {

/// Rectangular sample lattice, endpoints included, u outer and v inner.
struct GridSpec {
  Interval u_range;
  Interval v_range;
  int u_samples = 2;
  int v_samples = 2;

  double u(int i) const { return u_range.sample(i, u_samples); }
  double v(int j) const { return v_range.sample(j, v_samples); }
  std::size_t size() const { return static_cast<std::size_t>(u_samples) * static_cast<std::size_t>(v_samples); }
};

/// Full patch domain with the given sample counts.
GridSpec grid_over(const SurfacePatch& patch, int u_samples, int v_samples);

/// Throws UsageError unless both axes have ≥ 2 samples and the ranges lie
/// inside the patch domain.
void validate_grid(const GridSpec& grid, const SurfacePatch& patch);

struct GridAxis {
  Interval range;
  int samples = 2;
};

/// Parses "start:end:count" (count ≥ 2, start < end). Throws UsageError.
GridAxis parse_grid_axis(std::string_view text);

}  // namespace meridian
