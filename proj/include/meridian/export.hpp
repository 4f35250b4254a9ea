#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "meridian/grid.hpp"
#include "meridian/surface.hpp"
#include "meridian/verification.hpp"

namespace meridian {

inline constexpr const char* kCsvHeader = "u,v,x1,x2,x3,x4,E,F,G,L,M,N,k,kappa,K,H1,H2,H3,H4,HdotH";

/// 17 significant digits; parses back to the same binary64 value.
std::string format_real(double x);

/// One header line, then one row per grid point (u outer, v inner). Returns
/// the number of data rows.
std::size_t write_grid_csv(const SurfacePatch& patch, const GridSpec& grid, std::ostream& os);
/// Throws IoError if the file cannot be written.
std::size_t export_grid_csv(const SurfacePatch& patch, const GridSpec& grid, const std::string& path);

/// 3×4 linear map ℝ⁴ → ℝ³ applied to each sample before writing vertices.
using Projection = std::array<std::array<double, 4>, 3>;

/// Drops x4.
Projection default_projection();

struct MeshCounts {
  std::size_t vertices = 0;
  std::size_t faces = 0;
};

/// `v x y z` per sample and two triangles `f a b c` per grid cell.
/// Throws SingularProjection if the projection has rank < 3.
MeshCounts write_obj(const SurfacePatch& patch, const GridSpec& grid, const Projection& proj, std::ostream& os);
MeshCounts export_obj(const SurfacePatch& patch, const GridSpec& grid, const Projection& proj,
                      const std::string& path);

/// One block per claim: claim_id, passed, max_residual, threshold, worst_point.
std::string format_report(const std::vector<VerificationReport>& reports);

}  // namespace meridian
