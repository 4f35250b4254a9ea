#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "meridian/errors.hpp"
#include "meridian/export.hpp"

using namespace meridian;

namespace {

SurfacePatch mt_patch() {
  MTFamilyParams p;
  p.a = -1.0;
  p.c = 1.0;
  p.section = {0.0, 0.0, -0.5, Branch::Plus};
  return mt_general_patch(p, Interval{0.2, 3.0});
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header) {
  std::istringstream in(text);
  std::getline(in, *header);
  std::vector<std::vector<double>> rows;
  for (std::string line; std::getline(in, line);) {
    std::vector<double> row;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("meridian_unit_" + name);
}

}  // namespace

TEST_CASE("17 significant digits round trip") {
  for (const double x : {0.1, -1.0 / 3.0, 6.02214076e23, 2.2250738585072014e-308, 1.0 + 1e-15}) {
    CHECK(std::stod(format_real(x)) == x);
  }
}

TEST_CASE("CSV header, counts and row order") {
  const SurfacePatch patch = mt_patch();
  std::ostringstream os;
  const std::size_t n = write_grid_csv(patch, GridSpec{{0.5, 1.0}, {0.0, 1.0}, 2, 2}, os);
  CHECK(n == 4);
  std::string header;
  const auto rows = parse_csv(os.str(), &header);
  CHECK(header == "u,v,x1,x2,x3,x4,E,F,G,L,M,N,k,kappa,K,H1,H2,H3,H4,HdotH");
  REQUIRE(rows.size() == 4);
  CHECK(rows[0][0] == 0.5);
  CHECK(rows[0][1] == 0.0);
  CHECK(rows[1][0] == 0.5);
  CHECK(rows[1][1] == 1.0);
  CHECK(rows[2][0] == 1.0);
  for (const auto& r : rows) {
    CHECK(r.size() == 20);
    CHECK(std::fabs(r[19]) <= 1e-9);
  }
}

TEST_CASE("CSV values round trip against point data") {
  const SurfacePatch patch = mt_patch();
  const GridSpec grid{{0.3, 2.0}, {0.0, 6.0}, 4, 5};
  std::ostringstream os;
  write_grid_csv(patch, grid, os);
  std::string header;
  for (const auto& r : parse_csv(os.str(), &header)) {
    const PointData p = point_data(patch, r[0], r[1]);
    const double expect[] = {p.u,  p.v, p.z.x1, p.z.x2, p.z.x3,  p.z.x4, p.E,    p.F,    p.G,    p.L,
                             p.M,  p.N, p.k,    p.kappa, p.K,    p.H.x1, p.H.x2, p.H.x3, p.H.x4, inner(p.H, p.H)};
    for (int i = 0; i < 20; ++i) CHECK(r[static_cast<std::size_t>(i)] == expect[i]);
  }
}

TEST_CASE("cone family rows have vanishing second fundamental form") {
  const SurfacePatch cone = mt_cone_patch(-0.5, 0.0, {profiles::constant(1.0), {0.0, 6.0}});
  std::ostringstream os;
  write_grid_csv(cone, grid_over(cone, 5, 5), os);
  std::string header;
  for (const auto& r : parse_csv(os.str(), &header)) {
    CHECK(std::fabs(r[9]) < 1e-13);
    CHECK(std::fabs(r[10]) < 1e-13);
    CHECK(std::fabs(r[11]) < 1e-13);
  }
}

TEST_CASE("CSV output is deterministic and file export reports rows") {
  const SurfacePatch patch = mt_patch();
  const GridSpec grid{{0.2, 3.0}, {0.0, 6.0}, 7, 9};
  const auto a = temp_file("a.csv"), b = temp_file("b.csv");
  CHECK(export_grid_csv(patch, grid, a.string()) == 63);
  CHECK(export_grid_csv(patch, grid, b.string()) == 63);
  std::ifstream fa(a), fb(b);
  const std::string sa{std::istreambuf_iterator<char>(fa), {}}, sb{std::istreambuf_iterator<char>(fb), {}};
  CHECK(sa == sb);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  CHECK_THROWS_AS(export_grid_csv(patch, grid, "/nonexistent-dir/x.csv"), IoError);
}

TEST_CASE("OBJ export") {
  const SurfacePatch patch = mt_patch();
  const GridSpec grid{{0.5, 1.5}, {0.0, 2.0}, 3, 3};
  std::ostringstream os;
  const MeshCounts c = write_obj(patch, grid, default_projection(), os);
  CHECK(c.vertices == 9);
  CHECK(c.faces == 8);
  int v = 0, f = 0;
  std::istringstream in(os.str());
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("v ", 0) == 0) {
      ++v;
      std::istringstream ls(line.substr(2));
      double x, y, z;
      ls >> x >> y >> z;
      CHECK((std::isfinite(x) && std::isfinite(y) && std::isfinite(z)));
    }
    if (line.rfind("f ", 0) == 0) {
      ++f;
      std::istringstream ls(line.substr(2));
      int a, b, d;
      ls >> a >> b >> d;
      CHECK((a >= 1 && b >= 1 && d >= 1 && a <= 9 && b <= 9 && d <= 9));
    }
  }
  CHECK(v == 9);
  CHECK(f == 8);
  Projection rank2{{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}}};
  CHECK_THROWS_AS(write_obj(patch, grid, rank2, os), SingularProjection);
  CHECK_THROWS_AS(export_obj(patch, grid, default_projection(), "/nonexistent-dir/x.obj"), IoError);
  CHECK_THROWS_AS(write_obj(patch, GridSpec{{0.5, 1.5}, {0.0, 2.0}, 1, 3}, default_projection(), os), UsageError);
}

TEST_CASE("report format") {
  VerificationReport r;
  r.claim_id = "demo";
  r.max_residual = 1e-12;
  r.threshold = 1e-9;
  r.passed = true;
  r.worst_u = 1.0;
  r.worst_v = 2.0;
  r.samples = 4;
  const std::string text = format_report({r});
  CHECK(text.find("claim_id: demo\n") != std::string::npos);
  CHECK(text.find("passed: true\n") != std::string::npos);
  CHECK(text.find("max_residual: ") != std::string::npos);
  CHECK(text.find("threshold: ") != std::string::npos);
  CHECK(text.find("worst_point: (1, 2)") != std::string::npos);
}
