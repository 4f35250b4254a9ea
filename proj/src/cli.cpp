#include "meridian/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "meridian/errors.hpp"
#include "meridian/export.hpp"
#include "meridian/expression.hpp"
#include "meridian/grid.hpp"
#include "meridian/meridian.hpp"
#include "meridian/surface.hpp"
#include "meridian/verification.hpp"

namespace meridian {
namespace {

struct FamilyOptions {
  std::string type;
  std::optional<double> a, b, c;
  std::optional<std::string> sign;
  std::optional<std::string> section;
  std::optional<std::string> profile_expr;
  std::optional<std::string> u_axis;
  std::optional<std::string> v_axis;
};

struct Config {
  FamilyOptions family;
  std::optional<std::string> csv_path;
  std::optional<std::string> obj_path;
  std::optional<std::string> report_path;
  std::optional<std::string> projection;
  std::string suite = "paper";
  double tol = 1e-9;
  std::optional<double> at_u, at_v;
  // section command
  std::optional<double> A, B, C;
  std::optional<std::string> root;
  int samples = 1000;
};

template <class T>
const T& require(const std::optional<T>& v, const std::string& flag, const std::string& why) {
  if (!v) throw UsageError("missing " + flag + " (required for " + why + ")");
  return *v;
}

Branch parse_branch(const std::string& text, const std::string& flag) {
  if (text == "plus" || text == "+") return Branch::Plus;
  if (text == "minus" || text == "-") return Branch::Minus;
  throw UsageError(flag + " must be 'plus' or 'minus' (got '" + text + "')");
}

double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError(what + " is not a real number: '" + text + "'");
  return x;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// "A=..,B=..,C=..,root=plus"; every key required.
SectionParams parse_section(const std::string& text) {
  std::map<std::string, std::string> kv;
  for (const auto& part : split(text, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("--section entry '" + part + "' is not key=value");
    kv[trim(part.substr(0, eq))] = trim(part.substr(eq + 1));
  }
  for (const char* key : {"A", "B", "C", "root"})
    if (!kv.count(key)) throw UsageError(std::string("--section is missing ") + key);
  if (kv.size() != 4) throw UsageError("--section accepts exactly the keys A, B, C, root");
  SectionParams s;
  s.A = parse_real(kv["A"], "--section A");
  s.B = parse_real(kv["B"], "--section B");
  s.C = parse_real(kv["C"], "--section C");
  s.root = parse_branch(kv["root"], "--section root");
  return s;
}

// "f=...;g=...;phi=..." into named expressions.
std::map<std::string, Expression> parse_profile_expr(const std::string& text) {
  std::map<std::string, Expression> out;
  std::size_t offset = 0;
  for (const auto& part : split(text, ';')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) {
      throw ParseError("profile entry '" + part + "' is not name=expression", offset);
    }
    const std::string name = trim(part.substr(0, eq));
    try {
      out.emplace(name, Expression::parse(part.substr(eq + 1)));
    } catch (const ParseError& e) {
      throw ParseError("in '" + name + "': " + e.reason(), offset + eq + 1 + e.position());
    }
    offset += part.size() + 1;
  }
  return out;
}

const Expression& expr_for(const std::map<std::string, Expression>& m, const std::string& name,
                           const std::string& type) {
  const auto it = m.find(name);
  if (it == m.end()) throw UsageError("--profile-expr is missing '" + name + "' (required for " + type + ")");
  return it->second;
}

struct BuiltPatch {
  SurfacePatch patch;
  GridSpec grid;
  std::optional<MTFamilyParams> mt;
};

BuiltPatch build_family(const FamilyOptions& o) {
  const std::string& t = o.type;
  const std::string why = "--type " + t;
  const GridAxis ua = parse_grid_axis(require(o.u_axis, "--u", why));
  const GridAxis va = parse_grid_axis(require(o.v_axis, "--v", why));
  BuiltPatch out;
  if (t == "parabolic-mt") {
    MTFamilyParams p;
    p.a = require(o.a, "--a", why);
    p.b = require(o.b, "--b", why);
    p.c = require(o.c, "--c", why);
    p.sign = parse_branch(require(o.sign, "--sign", why), "--sign");
    p.section = parse_section(require(o.section, "--section", why));
    out.patch = mt_general_patch(p, ua.range, va.range);
    out.mt = p;
  } else if (t == "parabolic-cone") {
    const double a = require(o.a, "--a", why);
    const double b = require(o.b, "--b", why);
    const auto exprs = parse_profile_expr(require(o.profile_expr, "--profile-expr", why));
    ProfileCurvePhi phi{expr_for(exprs, "phi", t).as_profile('v'), va.range};
    out.patch = mt_cone_patch(a, b, phi, ua.range);
  } else if (t == "parabolic" || t == "elliptic" || t == "hyperbolic") {
    const auto exprs = parse_profile_expr(require(o.profile_expr, "--profile-expr", why));
    ProfilePair fp{expr_for(exprs, "f", t).as_profile('u'), expr_for(exprs, "g", t).as_profile('u'), ua.range};
    if (t == "parabolic") {
      out.patch = build_parabolic(fp, {expr_for(exprs, "phi", t).as_profile('v'), va.range});
    } else {
      const Profile1D w1 = expr_for(exprs, "w1", t).as_profile('v');
      const Profile1D w2 = expr_for(exprs, "w2", t).as_profile('v');
      out.patch = t == "elliptic" ? build_elliptic(fp, w1, w2, va.range) : build_hyperbolic(fp, w1, w2, va.range);
    }
  } else if (t.empty()) {
    throw UsageError("missing --type");
  } else {
    throw UsageError("unknown --type '" + t +
                     "' (expected parabolic-mt, parabolic-cone, parabolic, elliptic or hyperbolic)");
  }
  out.grid = GridSpec{ua.range, va.range, ua.samples, va.samples};
  validate_grid(out.grid, out.patch);
  return out;
}

Projection parse_projection(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 12) throw UsageError("--projection needs 12 comma-separated reals (row-major 3x4)");
  Projection p{};
  for (std::size_t k = 0; k < 12; ++k) p[k / 4][k % 4] = parse_real(trim(parts[k]), "--projection entry");
  return p;
}

// Checks that apply to the built family; empty for families with no claim.
std::vector<VerificationReport> family_reports(const BuiltPatch& b, const std::string& type, double tol) {
  std::vector<VerificationReport> r;
  if (type == "parabolic-mt" || type == "parabolic-cone") {
    r.push_back(verify_marginally_trapped(b.patch, b.grid, tol));
  }
  if (type.rfind("parabolic", 0) == 0) {
    r.push_back(verify_flat_normal_connection(b.patch, b.grid, tol));
    r.push_back(verify_closed_form_invariants(b.patch, b.grid, tol));
  }
  if (b.mt) r.push_back(verify_ode_chain(*b.mt, GridAxis{b.grid.u_range, b.grid.u_samples}, tol));
  return r;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.informational && !r.passed) return false;
  return true;
}

nlohmann::json vec_json(const Vec4M& v) { return nlohmann::json::array({v.x1, v.x2, v.x3, v.x4}); }

nlohmann::json point_json(const PointData& p, double tol) {
  const PointClass pc = classify_point(p, tol);
  nlohmann::json j;
  j["u"] = p.u;
  j["v"] = p.v;
  j["z"] = vec_json(p.z);
  j["E"] = p.E;
  j["F"] = p.F;
  j["G"] = p.G;
  j["L"] = p.L;
  j["M"] = p.M;
  j["N"] = p.N;
  j["k"] = p.k;
  j["kappa"] = p.kappa;
  j["K"] = p.K;
  j["H"] = vec_json(p.H);
  j["H1"] = p.H1;
  j["H2"] = p.H2;
  j["HdotH"] = inner(p.H, p.H);
  j["n1"] = vec_json(p.n1);
  j["n2"] = vec_json(p.n2);
  j["flat_point"] = pc.kind == PointKind::FlatPoint;
  if (pc.asymptotic_tangents) j["asymptotic_tangents"] = *pc.asymptotic_tangents;
  j["marginally_trapped"] = is_marginally_trapped(p, tol);
  return j;
}

void add_family_options(CLI::App* cmd, FamilyOptions& f) {
  cmd->add_option("--type", f.type, "parabolic-mt | parabolic-cone | parabolic | elliptic | hyperbolic");
  cmd->add_option("--a", f.a, "family constant a");
  cmd->add_option("--b", f.b, "family constant b");
  cmd->add_option("--c", f.c, "family constant c");
  cmd->add_option("--sign", f.sign, "plus | minus");
  cmd->add_option("--section", f.section, "A=..,B=..,C=..,root=plus|minus");
  cmd->add_option("--profile-expr", f.profile_expr, "name=expr;... with names f, g, phi, w1, w2");
  cmd->add_option("--u", f.u_axis, "start:end:count");
  cmd->add_option("--v", f.v_axis, "start:end:count");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants and marginally trapped meridian surfaces in Minkowski 4-space", "meridian"};
  app.require_subcommand(1);
  Config cfg;

  auto* sample = app.add_subcommand("sample", "sample a family on a grid and write CSV to stdout or --csv");
  add_family_options(sample, cfg.family);
  sample->add_option("--csv", cfg.csv_path, "output path");

  auto* invariants = app.add_subcommand("invariants", "point invariants of a family as JSON");
  add_family_options(invariants, cfg.family);
  invariants->add_option("--at-u", cfg.at_u, "u of the point");
  invariants->add_option("--at-v", cfg.at_v, "v of the point");
  invariants->add_option("--tol", cfg.tol, "classification tolerance");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", cfg.suite, "suite name (paper)");
  verify->add_option("--tol", cfg.tol, "residual threshold");
  verify->add_option("--report", cfg.report_path, "also write the report here");

  auto* family = app.add_subcommand("family", "build a family, export it and check its claims");
  add_family_options(family, cfg.family);
  family->add_option("--csv", cfg.csv_path, "CSV output path");
  family->add_option("--obj", cfg.obj_path, "OBJ output path");
  family->add_option("--projection", cfg.projection, "3x4 row-major matrix for OBJ (default drops x4)");
  family->add_option("--report", cfg.report_path, "verification report path (default stdout)");
  family->add_option("--tol", cfg.tol, "residual threshold");

  auto* section = app.add_subcommand("section", "curvature of a plane section of the paraboloid");
  section->add_option("--A", cfg.A, "coefficient of cos v");
  section->add_option("--B", cfg.B, "coefficient of sin v");
  section->add_option("--C", cfg.C, "constant term");
  section->add_option("--root", cfg.root, "plus | minus");
  section->add_option("--samples", cfg.samples, "sample count");
  section->add_option("--tol", cfg.tol, "residual threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");

    if (*verify) {
      if (cfg.suite != "paper") throw UsageError("unknown --suite '" + cfg.suite + "' (expected paper)");
      const auto reports = run_paper_suite(cfg.tol);
      const std::string text = format_report(reports);
      out << text;
      std::size_t passed = 0;
      for (const auto& r : reports) passed += (r.passed && !r.informational) ? 1 : 0;
      out << "passed_claims: " << passed << '\n';
      if (cfg.report_path) {
        std::ofstream f(*cfg.report_path, std::ios::binary | std::ios::trunc);
        if (!(f << text)) throw IoError("cannot write '" + *cfg.report_path + "'");
      }
      return all_passed(reports) ? kExitOk : kExitVerificationFailed;
    }

    if (*section) {
      SectionParams s;
      s.A = require(cfg.A, "--A", "section");
      s.B = require(cfg.B, "--B", "section");
      s.C = require(cfg.C, "--C", "section");
      s.root = parse_branch(require(cfg.root, "--root", "section"), "--root");
      if (!(s.discriminant() > 0.0)) throw ParamError("section requires A^2 + B^2 - 2C > 0");
      if (cfg.samples < 2) throw UsageError("--samples must be at least 2");
      const ProfileCurvePhi phi = plane_section_phi(s);
      const auto r = verify_constant_section_curvature(s, cfg.samples, cfg.tol);
      out << "arc: [" << format_real(phi.domain.lo) << ", " << format_real(phi.domain.hi) << "]\n"
          << "curvature: " << format_real(plane_section_curvature(s)) << '\n'
          << format_report({r});
      return r.passed ? kExitOk : kExitVerificationFailed;
    }

    const BuiltPatch built = build_family(cfg.family);

    if (*sample) {
      if (cfg.csv_path) {
        export_grid_csv(built.patch, built.grid, *cfg.csv_path);
      } else {
        write_grid_csv(built.patch, built.grid, out);
      }
      return kExitOk;
    }

    if (*invariants) {
      nlohmann::json j;
      if (cfg.at_u || cfg.at_v) {
        const double u = require(cfg.at_u, "--at-u", "a single point");
        const double v = require(cfg.at_v, "--at-v", "a single point");
        j = point_json(point_data(built.patch, u, v), cfg.tol);
      } else {
        j = nlohmann::json::array();
        for (int i = 0; i < built.grid.u_samples; ++i)
          for (int k = 0; k < built.grid.v_samples; ++k)
            j.push_back(point_json(point_data(built.patch, built.grid.u(i), built.grid.v(k)), cfg.tol));
      }
      out << j.dump(2) << '\n';
      return kExitOk;
    }

    // family
    if (cfg.csv_path) {
      const std::size_t rows = export_grid_csv(built.patch, built.grid, *cfg.csv_path);
      err << "wrote " << rows << " rows to " << *cfg.csv_path << '\n';
    }
    if (cfg.obj_path) {
      const Projection proj = cfg.projection ? parse_projection(*cfg.projection) : default_projection();
      const MeshCounts mc = export_obj(built.patch, built.grid, proj, *cfg.obj_path);
      err << "wrote " << mc.vertices << " vertices and " << mc.faces << " faces to " << *cfg.obj_path << '\n';
    }
    const auto reports = family_reports(built, cfg.family.type, cfg.tol);
    const std::string text = format_report(reports);
    if (cfg.report_path) {
      std::ofstream f(*cfg.report_path, std::ios::binary | std::ios::trunc);
      if (!(f << text)) throw IoError("cannot write '" + *cfg.report_path + "'");
    } else {
      out << text;
    }
    return all_passed(reports) ? kExitOk : kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace meridian
