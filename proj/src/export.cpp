#include "meridian/export.hpp"

#include <Eigen/Dense>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "meridian/errors.hpp"

namespace meridian {

std::string format_real(double x) {
  char buf[40];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", x);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::size_t write_grid_csv(const SurfacePatch& patch, const GridSpec& grid, std::ostream& os) {
  validate_grid(grid, patch);
  os << kCsvHeader << '\n';
  std::size_t rows = 0;
  for (int i = 0; i < grid.u_samples; ++i) {
    for (int j = 0; j < grid.v_samples; ++j) {
      const PointData p = point_data(patch, grid.u(i), grid.v(j));
      const double cols[] = {p.u,  p.v,     p.z.x1, p.z.x2, p.z.x3, p.z.x4, p.E,    p.F,    p.G,    p.L,
                             p.M,  p.N,     p.k,    p.kappa, p.K,   p.H.x1, p.H.x2, p.H.x3, p.H.x4, inner(p.H, p.H)};
      bool first = true;
      for (const double c : cols) {
        if (!first) os << ',';
        os << format_real(c);
        first = false;
      }
      os << '\n';
      ++rows;
    }
  }
  return rows;
}

namespace {

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

void close_checked(std::ofstream& out, const std::string& path) {
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace

std::size_t export_grid_csv(const SurfacePatch& patch, const GridSpec& grid, const std::string& path) {
  validate_grid(grid, patch);
  std::ofstream out = open_for_write(path);
  const std::size_t rows = write_grid_csv(patch, grid, out);
  close_checked(out, path);
  return rows;
}

Projection default_projection() {
  return {{{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}}};
}

MeshCounts write_obj(const SurfacePatch& patch, const GridSpec& grid, const Projection& proj, std::ostream& os) {
  validate_grid(grid, patch);
  Eigen::Matrix<double, 3, 4> m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = proj[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  const Eigen::JacobiSVD<Eigen::Matrix<double, 3, 4>> svd(m);
  const auto sv = svd.singularValues();
  if (!(sv(0) > 0.0) || sv(2) <= 1e-12 * sv(0)) throw SingularProjection("projection matrix has rank < 3");

  MeshCounts counts;
  os << "# " << patch.label << '\n';
  for (int i = 0; i < grid.u_samples; ++i) {
    for (int j = 0; j < grid.v_samples; ++j) {
      const Vec4M z = jet_eval_surface(patch, grid.u(i), grid.v(j)).val();
      const Eigen::Vector4d zv(z.x1, z.x2, z.x3, z.x4);
      const Eigen::Vector3d p = m * zv;
      os << "v " << format_real(p(0)) << ' ' << format_real(p(1)) << ' ' << format_real(p(2)) << '\n';
      ++counts.vertices;
    }
  }
  const auto idx = [&](int i, int j) { return static_cast<std::size_t>(i) * grid.v_samples + j + 1; };
  for (int i = 0; i + 1 < grid.u_samples; ++i) {
    for (int j = 0; j + 1 < grid.v_samples; ++j) {
      os << "f " << idx(i, j) << ' ' << idx(i + 1, j) << ' ' << idx(i + 1, j + 1) << '\n';
      os << "f " << idx(i, j) << ' ' << idx(i + 1, j + 1) << ' ' << idx(i, j + 1) << '\n';
      counts.faces += 2;
    }
  }
  return counts;
}

MeshCounts export_obj(const SurfacePatch& patch, const GridSpec& grid, const Projection& proj,
                      const std::string& path) {
  validate_grid(grid, patch);
  std::ostringstream buffer;
  const MeshCounts counts = write_obj(patch, grid, proj, buffer);
  std::ofstream out = open_for_write(path);
  out << buffer.str();
  close_checked(out, path);
  return counts;
}

std::string format_report(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << "claim_id: " << r.claim_id << '\n'
       << "passed: " << (r.passed ? "true" : "false") << '\n'
       << "max_residual: " << format_real(r.max_residual) << '\n'
       << "threshold: " << format_real(r.threshold) << '\n'
       << "worst_point: (" << format_real(r.worst_u) << ", " << format_real(r.worst_v) << ")\n"
       << "samples: " << r.samples << '\n';
    if (r.informational) os << "informational: true\n";
    for (const auto& [k, v] : r.details) os << "  " << k << ": " << format_real(v) << '\n';
    os << '\n';
  }
  return os.str();
}

}  // namespace meridian
