#include "meridian/verification.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "meridian/errors.hpp"

namespace meridian {

double VerificationReport::detail(const std::string& name) const {
  for (const auto& [k, v] : details)
    if (k == name) return v;
  return std::numeric_limits<double>::quiet_NaN();
}

namespace {

// Running maximum that remembers where it occurred; NaN is sticky.
struct MaxTracker {
  double value = 0.0;
  double u = 0.0;
  double v = 0.0;
  bool seen = false;

  void add(double r, double at_u, double at_v) {
    if (std::isnan(value)) return;
    if (!seen || std::isnan(r) || r > value) {
      value = r;
      u = at_u;
      v = at_v;
      seen = true;
    }
  }
};

double rel_dev(double num, double closed) { return std::fabs(num - closed) / std::fmax(std::fabs(closed), 1.0); }

VerificationReport finish(std::string id, const MaxTracker& m, double tol, std::size_t samples) {
  VerificationReport r;
  r.claim_id = std::move(id);
  r.max_residual = m.value;
  r.threshold = tol;
  r.passed = r.max_residual <= tol;
  r.worst_u = m.u;
  r.worst_v = m.v;
  r.samples = samples;
  return r;
}

void require_parabolic(const SurfacePatch& patch, const char* op) {
  if (patch.family != PatchFamily::Parabolic || !patch.parabolic) {
    throw UsageError(std::string(op) + " applies to meridian surfaces of parabolic type only, got '" + patch.label +
                     "' (" + to_string(patch.family) + ")");
  }
}

template <typename Fn>
void for_each_point(const GridSpec& grid, Fn&& fn) {
  for (int i = 0; i < grid.u_samples; ++i)
    for (int j = 0; j < grid.v_samples; ++j) fn(grid.u(i), grid.v(j));
}

}  // namespace

VerificationReport verify_flat_normal_connection(const SurfacePatch& patch, const GridSpec& grid, double tol) {
  require_parabolic(patch, "verify_flat_normal_connection");
  validate_grid(grid, patch);
  MaxTracker m;
  for_each_point(grid, [&](double u, double v) { m.add(std::fabs(point_data(patch, u, v).kappa), u, v); });
  return finish("flat_normal_connection", m, tol, grid.size());
}

VerificationReport verify_second_fundamental_form(const SurfacePatch& patch, const GridSpec& grid, double tol) {
  require_parabolic(patch, "verify_second_fundamental_form");
  validate_grid(grid, patch);
  MaxTracker all, ln, mdev, mopp;
  for_each_point(grid, [&](double u, double v) {
    const ParabolicClosedForm cf = parabolic_closed_form(*patch.parabolic, u, v);
    const SurfaceDerivatives d = derivatives(jet_eval_surface(patch, u, v));
    const PointData p = point_data(d, cf.frame);
    const double r_ln = std::fmax(std::fabs(p.L), std::fabs(p.N));
    const double r_m = rel_dev(p.M, cf.M);
    double r_opp = 0.0;
    if (patch.parabolic->profile.f.at(u).du > 0.0) {
      const PointData q = point_data(d, NormalFrame{cf.frame.n1, -cf.frame.n2});
      r_opp = rel_dev(q.M, cf.M_opposite_n2);
    }
    ln.add(r_ln, u, v);
    mdev.add(r_m, u, v);
    mopp.add(r_opp, u, v);
    all.add(std::fmax(std::fmax(r_ln, r_m), r_opp), u, v);
  });
  VerificationReport r = finish("second_fundamental_form", all, tol, grid.size());
  r.details = {{"max_abs_L_N", ln.value}, {"max_rel_M", mdev.value}, {"max_rel_M_opposite_n2", mopp.value}};
  return r;
}

VerificationReport verify_marginally_trapped(const SurfacePatch& patch, const GridSpec& grid, double tol,
                                             double floor) {
  validate_grid(grid, patch);
  MaxTracker m;
  double min_norm = std::numeric_limits<double>::infinity();
  double max_hh = 0.0;
  for_each_point(grid, [&](double u, double v) {
    const PointData p = point_data(patch, u, v);
    const double norm = euclidean_norm(p.H);
    min_norm = std::fmin(min_norm, norm);
    const double hh = inner(p.H, p.H);
    max_hh = std::fmax(max_hh, std::fabs(hh));
    const double r = causal_character(p.H, std::numeric_limits<double>::min()) == CausalCharacter::Zero
                         ? std::numeric_limits<double>::infinity()
                         : std::fabs(hh) / std::fmax(p.H1 * p.H1 + p.H2 * p.H2, floor);
    m.add(r, u, v);
  });
  VerificationReport r = finish("marginally_trapped", m, tol, grid.size());
  r.details = {{"min_H_norm", min_norm}, {"max_abs_HdotH", max_hh}};
  return r;
}

VerificationReport verify_ode_chain(const MTFamilyParams& params, const GridAxis& u_axis, double tol) {
  const ProfilePair fp = mt_general_profile(params, u_axis.range);
  const double s = sign_of(params.sign);
  const double a = params.a, c = params.c;
  MaxTracker all, r17, r18, r19;
  for (int i = 0; i < u_axis.samples; ++i) {
    const double u = u_axis.range.sample(i, u_axis.samples);
    const Jet2 g = fp.g.at(u);
    const double lin = c - s * a * u;
    const double sg = lin > 0.0 ? 1.0 : -1.0;
    const double q = -2.0 * g.du;
    const double q32 = q * std::sqrt(q);

    const double lhs = -u * g.duu + 2.0 * g.du;
    const double e17 = std::fabs(lhs - s * a * sg * q32) / std::fmax(std::fabs(u * g.duu) + std::fabs(2.0 * g.du), 1.0);

    // h = sgn(c ∓ au)/√(−2g′), h′ = sgn(c ∓ au)·g″/(−2g′)^{3/2}.
    const double h = sg / std::sqrt(q);
    const double hp = sg * g.duu / q32;
    const double e18 = std::fabs(hp + h / u + s * a / u) / std::fmax(std::fabs(hp) + std::fabs(h / u), 1.0);

    const double closed = -u * u / (2.0 * lin * lin);
    const double e19 = rel_dev(g.du, closed);

    r17.add(e17, u, 0.0);
    r18.add(e18, u, 0.0);
    r19.add(e19, u, 0.0);
    all.add(std::fmax(e17, std::fmax(e18, e19)), u, 0.0);
  }
  VerificationReport r = finish("ode_chain", all, tol, static_cast<std::size_t>(u_axis.samples));
  r.details = {{"ode_17a", r17.value}, {"linear_18", r18.value}, {"closed_form_19", r19.value}};
  return r;
}

VerificationReport verify_ode_chain(const MTFamilyParams& params, int u_samples, double tol) {
  if (u_samples < 2) throw UsageError("verify_ode_chain needs at least 2 samples");
  return verify_ode_chain(params, GridAxis{mt_default_u_range(params.a, params.c, params.sign), u_samples}, tol);
}

VerificationReport verify_constant_section_curvature(const SectionParams& section, int samples, double tol,
                                                     std::optional<Interval> v_range) {
  if (samples < 2) throw UsageError("verify_constant_section_curvature needs at least 2 samples");
  const ProfileCurvePhi phi = plane_section_phi(section, v_range);
  const double expected = plane_section_curvature(section, phi.domain);
  const double margin = 0.05 * phi.domain.width();
  const Interval inner_arc{phi.domain.lo + margin, phi.domain.hi - margin};
  double sum = 0.0;
  std::vector<double> values(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    values[static_cast<std::size_t>(j)] = kappa_bar(phi, inner_arc.sample(j, samples));
    sum += values[static_cast<std::size_t>(j)];
  }
  const double mean = sum / samples;
  double var = 0.0;
  MaxTracker worst;
  for (int j = 0; j < samples; ++j) {
    const double d = values[static_cast<std::size_t>(j)] - mean;
    var += d * d;
    worst.add(std::fabs(values[static_cast<std::size_t>(j)] - expected), 0.0, inner_arc.sample(j, samples));
  }
  const double stdev = std::sqrt(var / samples);
  MaxTracker m;
  m.add(stdev + std::fabs(mean - expected), 0.0, worst.v);
  VerificationReport r = finish("section_curvature_constancy", m, tol, static_cast<std::size_t>(samples));
  r.details = {{"mean", mean},
               {"stdev", stdev},
               {"expected", expected},
               {"unsigned_formula", -sign_of(section.root) / std::sqrt(section.discriminant())},
               {"arc_lo", phi.domain.lo},
               {"arc_hi", phi.domain.hi}};
  return r;
}

VerificationReport verify_case1_hyperplane(const ProfileCurvePhi& phi, const ProfilePair& fp, const GridSpec& grid,
                                           double tol) {
  constexpr int kChecks = 65;
  double kb_max = 0.0;
  for (int j = 0; j < kChecks; ++j) kb_max = std::fmax(kb_max, std::fabs(kappa_bar(phi, phi.domain.sample(j, kChecks))));
  if (kb_max > tol) {
    throw UsageError("verify_case1_hyperplane requires kappa_bar == 0; max |kappa_bar| = " + std::to_string(kb_max));
  }
  const SurfacePatch patch = build_parabolic(fp, phi);
  validate_grid(grid, patch);
  // The constant field is the family's explicit n1; the automatic frame is
  // only fixed up to a boost of the normal plane.
  const Vec4M ref_n1 = parabolic_closed_form(*patch.parabolic, grid.u(0), grid.v(0)).frame.n1;
  const Vec4M ref_z = jet_eval_surface(patch, grid.u(0), grid.v(0)).val();
  MaxTracker all, n1_dev, plane_dev, normal_dev;
  std::size_t trapped = 0;
  double kb_grid = 0.0;
  for_each_point(grid, [&](double u, double v) {
    const PointData p = point_data(patch, u, v);
    const Vec4M n1 = parabolic_closed_form(*patch.parabolic, u, v).frame.n1;
    const double dnormal = std::fmax(std::fabs(inner(n1, p.x)), std::fabs(inner(n1, p.y)));
    normal_dev.add(dnormal, u, v);
    const double dn = std::fmax(max_abs(n1 - ref_n1), dnormal);
    const double dz = std::fabs(inner(p.z - ref_z, ref_n1));
    const bool mt = causal_character(p.H, tol) == CausalCharacter::Lightlike;
    if (mt) ++trapped;
    kb_grid = std::fmax(kb_grid, std::fabs(kappa_bar(phi, v)));
    n1_dev.add(dn, u, v);
    plane_dev.add(dz, u, v);
    all.add(std::fmax(std::fmax(dn, dz), mt ? std::numeric_limits<double>::infinity() : 0.0), u, v);
  });
  VerificationReport r = finish("case1_hyperplane", all, tol, grid.size());
  r.details = {{"max_abs_kappa_bar", kb_grid},
               {"n1_deviation", n1_dev.value},
               {"hyperplane_deviation", plane_dev.value},
               {"n1_normality", normal_dev.value},
               {"trapped_points", static_cast<double>(trapped)}};
  return r;
}

VerificationReport verify_meridian_planarity(const SurfacePatch& patch, const ProfileCurvePhi& phi, double v0,
                                             int u_samples, double tol) {
  if (u_samples < 2) throw UsageError("verify_meridian_planarity needs at least 2 samples");
  if (!patch.v_range.contains(v0)) throw UsageError("v0 outside the patch domain");
  const auto [axis, zbar] = meridian_plane(phi, v0);
  Eigen::MatrixXd m(4, u_samples + 1);
  auto put = [&m](int col, const Vec4M& w) {
    for (int r = 0; r < 4; ++r) m(r, col) = w[r];
  };
  put(0, axis);
  put(1, zbar);
  const double u_ref = patch.u_range.lo;
  const Vec4M z_ref = jet_eval_surface(patch, u_ref, v0).val();
  for (int i = 1; i < u_samples; ++i) {
    const double u = patch.u_range.sample(i, u_samples);
    put(i + 1, jet_eval_surface(patch, u, v0).val() - z_ref);
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd sv = svd.singularValues();
  MaxTracker t;
  t.add(sv(2) / sv(0), u_ref, v0);
  VerificationReport r = finish("meridian_planarity", t, tol, static_cast<std::size_t>(u_samples));
  r.details = {{"sigma1", sv(0)}, {"sigma2", sv(1)}, {"sigma3", sv(2)}, {"v0", v0}};
  return r;
}

VerificationReport verify_meridian_planarity(const SurfacePatch& patch, double v0, int u_samples, double tol) {
  require_parabolic(patch, "verify_meridian_planarity");
  return verify_meridian_planarity(patch, patch.parabolic->phi, v0, u_samples, tol);
}

VerificationReport verify_closed_form_invariants(const SurfacePatch& patch, const GridSpec& grid, double tol) {
  require_parabolic(patch, "verify_closed_form_invariants");
  validate_grid(grid, patch);
  MaxTracker all, efg, kk, gauss, h12, hvec, mm, nc;
  for_each_point(grid, [&](double u, double v) {
    const ParabolicClosedForm cf = parabolic_closed_form(*patch.parabolic, u, v);
    const SurfaceDerivatives d = derivatives(jet_eval_surface(patch, u, v));
    const PointData p = point_data(d);
    const PointData q = point_data(d, cf.frame);
    const double r_efg = std::fmax(rel_dev(p.E, cf.E), std::fmax(rel_dev(p.F, cf.F), rel_dev(p.G, cf.G)));
    const double r_k = rel_dev(p.k, cf.k);
    const double r_K = rel_dev(p.K, cf.K);
    double r_h = std::fmax(rel_dev(q.H1, cf.H1), rel_dev(q.H2, cf.H2));
    if (patch.parabolic->profile.f.at(u).du > 0.0) {
      const PointData o = point_data(d, NormalFrame{cf.frame.n1, -cf.frame.n2});
      r_h = std::fmax(r_h, rel_dev(o.H2, cf.H2_opposite_n2));
    }
    const double r_hv = max_abs(p.H - cf.H) / std::fmax(max_abs(cf.H), 1.0);
    const double r_m = rel_dev(q.M, cf.M);
    const double r_nc = std::fabs(p.kappa);
    efg.add(r_efg, u, v);
    kk.add(r_k, u, v);
    gauss.add(r_K, u, v);
    h12.add(r_h, u, v);
    hvec.add(r_hv, u, v);
    mm.add(r_m, u, v);
    nc.add(r_nc, u, v);
    all.add(std::fmax(std::fmax(std::fmax(r_efg, r_k), std::fmax(r_K, r_h)), std::fmax(std::fmax(r_hv, r_m), r_nc)),
            u, v);
  });
  VerificationReport r = finish("closed_form_invariants", all, tol, grid.size());
  r.details = {{"EFG", efg.value}, {"k", kk.value}, {"K", gauss.value}, {"H1_H2", h12.value},
               {"H_vector", hvec.value}, {"M", mm.value}, {"kappa", nc.value}};
  return r;
}

VerificationReport verify_cone_lightlike_normal(const SurfacePatch& patch, const GridSpec& grid, double tol) {
  validate_grid(grid, patch);
  auto direction = [](const Vec4M& w) {
    Vec4M d = w / euclidean_norm(w);
    // Fix the representative sign by the largest component.
    int big = 0;
    for (int i = 1; i < 4; ++i)
      if (std::fabs(d[i]) > std::fabs(d[big])) big = i;
    return d[big] < 0.0 ? -d : d;
  };
  double best = std::numeric_limits<double>::infinity();
  MaxTracker best_tracker;
  for (const double s : {1.0, -1.0}) {
    MaxTracker m;
    const PointData ref = point_data(patch, grid.u(0), grid.v(0));
    const Vec4M d0 = direction(ref.n1 + s * ref.n2);
    for_each_point(grid, [&](double u, double v) {
      const PointData p = point_data(patch, u, v);
      m.add(max_abs(direction(p.n1 + s * p.n2) - d0), u, v);
    });
    if (m.value < best) {
      best = m.value;
      best_tracker = m;
    }
  }
  VerificationReport r = finish("cone_lightlike_normal", best_tracker, tol, grid.size());
  r.informational = true;
  return r;
}

namespace {

ProfilePair cubic_profile(Interval I) {
  return {profiles::identity(),
          profiles::from([](const Jet2& u) { return (-1.0 / 3.0) * (u * u * u); }, "-u^3/3"), I};
}

}  // namespace

std::vector<VerificationReport> run_paper_suite(double tol) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  std::vector<VerificationReport> out;

  const ProfileCurvePhi phi_sin{profiles::from([](const Jet2& v) { return 2.0 + sin(v); }, "2+sin(v)"), {0.0, kTwoPi}};
  const SurfacePatch generic = build_parabolic(cubic_profile({0.5, 2.0}), phi_sin);
  out.push_back(verify_flat_normal_connection(generic, grid_over(generic, 50, 50), tol));
  out.push_back(verify_second_fundamental_form(generic, grid_over(generic, 50, 50), tol));

  const ProfilePair quad{profiles::identity(), profiles::from([](const Jet2& u) { return -0.5 * (u * u); }, "-u^2/2"),
                         {0.5, 2.0}};
  const ProfileCurvePhi phi_cos{profiles::from([](const Jet2& v) { return 2.0 + cos(v); }, "2+cos(v)"), {0.0, kTwoPi}};
  const SurfacePatch closed = build_parabolic(quad, phi_cos);
  out.push_back(verify_closed_form_invariants(closed, grid_over(closed, 50, 50), tol));

  MTFamilyParams mt{-1.0, 0.0, 1.0, Branch::Plus, {0.0, 0.0, -0.5, Branch::Plus}};
  const SurfacePatch theorem = mt_general_patch(mt, Interval{0.2, 3.0});
  VerificationReport r = verify_marginally_trapped(theorem, grid_over(theorem, 100, 20), tol);
  r.claim_id = "theorem_family_marginally_trapped";
  out.push_back(r);
  r = verify_closed_form_invariants(theorem, grid_over(theorem, 100, 20), tol);
  r.claim_id = "theorem_family_closed_form";
  out.push_back(r);

  const ProfileCurvePhi phi_circle{profiles::from([](const Jet2& v) { return -2.0 * cos(v); }, "-2cos(v)"), {1.6, 4.6}};
  const SurfacePatch cone = mt_cone_patch(-0.5, 0.0, phi_circle, {0.1, 3.0});
  r = verify_marginally_trapped(cone, grid_over(cone, 50, 50), tol);
  r.claim_id = "cone_family_marginally_trapped";
  out.push_back(r);

  out.push_back(verify_ode_chain(mt, GridAxis{{0.2, 3.0}, 200}, tol));
  out.push_back(verify_constant_section_curvature({3.0, 4.0, 0.0, Branch::Plus}, 1000, tol));

  const ProfileCurvePhi phi_sec{profiles::from([](const Jet2& v) { return reciprocal(cos(v)); }, "1/cos(v)"), {-1.2, 1.2}};
  const ProfilePair case1_fp = cubic_profile({0.5, 2.0});
  out.push_back(verify_case1_hyperplane(phi_sec, case1_fp, GridSpec{{0.5, 2.0}, {-1.2, 1.2}, 40, 40}, tol));

  out.push_back(verify_meridian_planarity(theorem, 1.0, 50, tol));

  r = verify_cone_lightlike_normal(cone, grid_over(cone, 20, 20), tol);
  out.push_back(r);
  return out;
}

}  // namespace meridian
