#include "meridian/meridian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "meridian/errors.hpp"

namespace meridian {

const char* to_string(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

namespace {

constexpr double kSectionEps = 1e-12;
constexpr double kSectionArcMargin = 0.01;

std::string fmt_num(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

[[noreturn]] void inadmissible(const std::string& what, const char* var, double at) {
  throw AdmissibilityError(what + " violated at " + var + " = " + fmt_num(at));
}

Jet2 cosh(const Jet2& x) { return 0.5 * (exp(x) + exp(-x)); }
Jet2 sinh(const Jet2& x) { return 0.5 * (exp(x) - exp(-x)); }

void check_spacelike_patch(const SurfacePatch& patch, int samples = 9) {
  for (int i = 0; i < samples; ++i) {
    for (int j = 0; j < samples; ++j) {
      const double u = patch.u_range.sample(i, samples);
      const double v = patch.v_range.sample(j, samples);
      const Jet2Vec4 z = jet_eval_surface(patch, u, v);
      const Vec4M zu = z.du();
      const Vec4M zv = z.dv();
      const double E = inner(zu, zu);
      const double F = inner(zu, zv);
      const double G = inner(zv, zv);
      if (!(E > 0.0) || !(G > 0.0) || !(E * G - F * F > 0.0)) {
        throw AdmissibilityError("patch '" + patch.label + "' is not spacelike at (u, v) = (" +
                                 fmt_num(u) + ", " + fmt_num(v) + ")");
      }
    }
  }
}

void check_w_regular(const Profile1D& w1, const Profile1D& w2, Interval v_range, int samples) {
  for (int j = 0; j < samples; ++j) {
    const double v = v_range.sample(j, samples);
    const Jet2 a = w1.at(v);
    const Jet2 b = w2.at(v);
    if (!(a.du * a.du + b.du * b.du > 0.0)) inadmissible("(w1')^2 + (w2')^2 != 0", "v", v);
  }
}

struct Arc {
  Interval range;
  double phi_sign = 0.0;
};

double section_phi_value(const SectionParams& s, double v) {
  const double theta = s.A * std::cos(v) + s.B * std::sin(v);
  return -theta + sign_of(s.root) * std::sqrt(theta * theta - 2.0 * s.C);
}

bool section_admissible_at(const SectionParams& s, double v) {
  const double theta = s.A * std::cos(v) + s.B * std::sin(v);
  return theta * theta - 2.0 * s.C >= kSectionEps && section_phi_value(s, v) != 0.0;
}

// Arcs of the circle where θ² − 2C ≥ ε; on each the root has constant sign.
Arc default_section_arc(const SectionParams& s) {
  const double D = s.discriminant();
  if (!(D > 0.0)) {
    throw ParamError("plane section requires A^2 + B^2 - 2C > 0 (got " + fmt_num(D) + ")");
  }
  const double T = 2.0 * s.C + kSectionEps;
  if (s.C < 0.0 && T <= 0.0) {
    // The section winds around the axis: every v is admissible.
    return {{0.0, 2.0 * std::numbers::pi}, sign_of(s.root)};
  }
  const double R = std::hypot(s.A, s.B);
  const double ratio = std::sqrt(std::max(T, 0.0)) / R;
  if (!(ratio < 1.0)) throw ParamError("plane section is degenerate (A^2 + B^2 - 2C too small)");
  const double half = std::acos(ratio);
  const double vc = std::atan2(s.B, s.A);
  // θ < 0 around vc + π, θ > 0 around vc.
  // Keep clear of the branch points at the arc ends, where φ̇ ~ 1/√(θ² − 2C).
  const double margin = kSectionArcMargin * 2.0 * half;
  const Interval negative{vc + std::numbers::pi - half + margin, vc + std::numbers::pi + half - margin};
  const Interval positive{vc - half + margin, vc + half - margin};
  const double mid_neg = section_phi_value(s, vc + std::numbers::pi);
  if (mid_neg != 0.0 && (s.C != 0.0 || s.root == Branch::Plus)) return {negative, mid_neg > 0 ? 1.0 : -1.0};
  const double mid_pos = section_phi_value(s, vc);
  return {positive, mid_pos > 0 ? 1.0 : -1.0};
}

Arc resolve_section_arc(const SectionParams& s, std::optional<Interval> v_range) {
  Arc arc = default_section_arc(s);
  if (!v_range || (v_range->lo == arc.range.lo && v_range->hi == arc.range.hi)) return arc;
  if (!(v_range->hi > v_range->lo)) throw AdmissibilityError("section v-range is empty");
  constexpr int kChecks = 257;
  double sign = 0.0;
  for (int j = 0; j < kChecks; ++j) {
    const double v = v_range->sample(j, kChecks);
    if (!section_admissible_at(s, v)) inadmissible("(A cos v + B sin v)^2 - 2C >= eps and phi != 0", "v", v);
    const double sg = section_phi_value(s, v) > 0.0 ? 1.0 : -1.0;
    if (sign == 0.0) sign = sg;
    if (sg != sign) inadmissible("constant sign of phi on the section arc", "v", v);
  }
  return {*v_range, sign};
}

}  // namespace

void check_parabolic_admissible(const ProfilePair& fp, int samples) {
  for (int i = 0; i < samples; ++i) {
    const double u = fp.domain.sample(i, samples);
    const Jet2 f = fp.f.at(u);
    const Jet2 g = fp.g.at(u);
    if (!(f.val > 0.0)) inadmissible("f(u) > 0", "u", u);
    if (!(-f.du * g.du > 0.0)) inadmissible("-f'(u) g'(u) > 0", "u", u);
  }
}

void check_elliptic_admissible(const ProfilePair& fp, int samples) {
  for (int i = 0; i < samples; ++i) {
    const double u = fp.domain.sample(i, samples);
    const Jet2 f = fp.f.at(u);
    const Jet2 g = fp.g.at(u);
    if (!(f.val > 0.0)) inadmissible("f(u) > 0", "u", u);
    if (!(f.du * f.du - g.du * g.du > 0.0)) inadmissible("f'(u)^2 - g'(u)^2 > 0", "u", u);
  }
}

void check_hyperbolic_admissible(const ProfilePair& fp, int samples) {
  for (int i = 0; i < samples; ++i) {
    const double u = fp.domain.sample(i, samples);
    const Jet2 f = fp.f.at(u);
    const Jet2 g = fp.g.at(u);
    if (!(f.val > 0.0)) inadmissible("f(u) > 0", "u", u);
    if (!(f.du * f.du + g.du * g.du > 0.0)) inadmissible("f'(u)^2 + g'(u)^2 > 0", "u", u);
  }
}

void check_phi_admissible(const ProfileCurvePhi& phi, int samples) {
  for (int j = 0; j < samples; ++j) {
    const double v = phi.domain.sample(j, samples);
    const Jet2 p = phi.phi.at(v);
    if (!(p.du * p.du + p.val * p.val > 0.0)) inadmissible("phi'(v)^2 + phi(v)^2 > 0", "v", v);
  }
}

SurfacePatch build_parabolic(const ProfilePair& fp, const ProfileCurvePhi& phi) {
  check_parabolic_admissible(fp);
  check_phi_admissible(phi);
  SurfacePatch patch;
  patch.immersion = [f = fp.f, g = fp.g, ph = phi.phi](const Jet2& u, const Jet2& v) {
    const Jet2 fu = f(u);
    const Jet2 gu = g(u);
    const Jet2 p = ph(v);
    const Jet2 fp_ = fu * p;
    return from_null_frame(fp_ * cos(v), fp_ * sin(v), 0.5 * (fp_ * p) + gu, fu);
  };
  patch.u_range = fp.domain;
  patch.v_range = phi.domain;
  patch.label = "parabolic(f=" + fp.f.label + ", g=" + fp.g.label + ", phi=" + phi.phi.label + ")";
  patch.family = PatchFamily::Parabolic;
  patch.parabolic = ParabolicFamily{fp, phi};
  return patch;
}

SurfacePatch build_elliptic(const ProfilePair& fp, const Profile1D& w1, const Profile1D& w2,
                            Interval v_range) {
  check_elliptic_admissible(fp);
  check_w_regular(w1, w2, v_range, 65);
  SurfacePatch patch;
  patch.immersion = [f = fp.f, g = fp.g, w1, w2](const Jet2& u, const Jet2& v) {
    const Jet2 fu = f(u);
    const Jet2 a = w1(v);
    const Jet2 b = w2(v);
    const Jet2 fc = fu * cos(a);
    return Jet2Vec4{{fc * cos(b), fc * sin(b), fu * sin(a), g(u)}};
  };
  patch.u_range = fp.domain;
  patch.v_range = v_range;
  patch.label = "elliptic(f=" + fp.f.label + ", g=" + fp.g.label + ", w1=" + w1.label + ", w2=" + w2.label + ")";
  patch.family = PatchFamily::Elliptic;
  check_spacelike_patch(patch);
  return patch;
}

SurfacePatch build_hyperbolic(const ProfilePair& fp, const Profile1D& w1, const Profile1D& w2,
                              Interval v_range) {
  check_hyperbolic_admissible(fp);
  check_w_regular(w1, w2, v_range, 65);
  SurfacePatch patch;
  patch.immersion = [f = fp.f, g = fp.g, w1, w2](const Jet2& u, const Jet2& v) {
    const Jet2 fu = f(u);
    const Jet2 a = w1(v);
    const Jet2 b = w2(v);
    const Jet2 fc = fu * cosh(a);
    return Jet2Vec4{{g(u), fc * cos(b), fc * sin(b), fu * sinh(a)}};
  };
  patch.u_range = fp.domain;
  patch.v_range = v_range;
  patch.label = "hyperbolic(f=" + fp.f.label + ", g=" + fp.g.label + ", w1=" + w1.label + ", w2=" + w2.label + ")";
  patch.family = PatchFamily::Hyperbolic;
  check_spacelike_patch(patch);
  return patch;
}

double kappa_m(const ProfilePair& fp, double u) {
  const Jet2 f = fp.f.at(u);
  const Jet2 g = fp.g.at(u);
  const double q = -2.0 * f.du * g.du;
  if (!(q > 0.0)) inadmissible("-f'(u) g'(u) > 0", "u", u);
  return (f.du * g.duu - g.du * f.duu) / (q * std::sqrt(q));
}

double kappa_bar(const ProfileCurvePhi& phi, double v) {
  const Jet2 p = phi.phi.at(v);
  const double q = p.du * p.du + p.val * p.val;
  if (!(q > 0.0)) inadmissible("phi'(v)^2 + phi(v)^2 > 0", "v", v);
  return (p.val * p.duu - 2.0 * p.du * p.du - p.val * p.val) / (q * std::sqrt(q));
}

double mt_pole(double a, double c, Branch sign) { return c / (sign_of(sign) * a); }

namespace {

double pole_radius(double pole) { return std::max(1e-6, 1e-3 * std::fabs(pole)); }

}  // namespace

Interval mt_default_u_range(double a, double c, Branch sign) {
  const Interval standard{0.2, 3.0};
  if (a == 0.0 || c == 0.0) return standard;
  const double pole = mt_pole(a, c, sign);
  const double r = pole_radius(pole);
  if (pole + r < standard.lo || pole - r > standard.hi) return standard;
  return {1.25 * pole, 1.25 * pole + 2.8};
}

ProfilePair mt_general_profile(const MTFamilyParams& p, std::optional<Interval> u_range) {
  if (p.a == 0.0) throw ParamError("marginally trapped family requires a != 0");
  if (p.c == 0.0) throw ParamError("marginally trapped family requires c != 0 (c ≠ 0)");
  const Interval I = u_range.value_or(mt_default_u_range(p.a, p.c, p.sign));
  if (!(I.lo > 0.0) || !(I.hi > I.lo)) {
    throw ParamError("u-range must satisfy 0 < u_min < u_max (got [" + fmt_num(I.lo) + ", " + fmt_num(I.hi) + "])");
  }
  const double pole = mt_pole(p.a, p.c, p.sign);
  const double r = pole_radius(pole);
  if (pole + r >= I.lo && pole - r <= I.hi) {
    throw ParamError("u-range [" + fmt_num(I.lo) + ", " + fmt_num(I.hi) + "] meets the pole u* = " +
                     fmt_num(pole) + " where c -/+ a u = 0");
  }
  const double s = sign_of(p.sign);
  const double a = p.a, b = p.b, c = p.c;
  Profile1D g{[=](const Jet2& u) {
                const Jet2 lin = c - (s * a) * u;
                const Jet2 num = (a * a) * (u * u) - (s * 2.0 * a * c) * u;
                return (s / (2.0 * a * a * a)) * (num / lin - (2.0 * c) * log(abs(lin)) + b);
              },
              "g_mt(a=" + fmt_num(a) + ",b=" + fmt_num(b) + ",c=" + fmt_num(c) + "," + to_string(p.sign) + ")"};
  ProfilePair fp{profiles::identity(), std::move(g), I};
  fp.f.label = "u";
  check_parabolic_admissible(fp);
  return fp;
}

ProfileCurvePhi plane_section_phi(const SectionParams& s, std::optional<Interval> v_range) {
  const Arc arc = resolve_section_arc(s, v_range);
  const double A = s.A, B = s.B, C = s.C, sg = sign_of(s.root);
  Profile1D phi{[=](const Jet2& v) {
                  const Jet2 theta = A * cos(v) + B * sin(v);
                  return -theta + sg * sqrt(theta * theta - 2.0 * C);
                },
                "section(A=" + fmt_num(A) + ",B=" + fmt_num(B) + ",C=" + fmt_num(C) + "," + to_string(s.root) + ")"};
  return {std::move(phi), arc.range};
}

double plane_section_curvature(const SectionParams& s, std::optional<Interval> v_range) {
  const Arc arc = resolve_section_arc(s, v_range);
  return -sign_of(s.root) * arc.phi_sign / std::sqrt(s.discriminant());
}

SurfacePatch mt_general_patch(const MTFamilyParams& p, std::optional<Interval> u_range,
                              std::optional<Interval> v_range) {
  ProfilePair fp = mt_general_profile(p, u_range);
  ProfileCurvePhi phi = plane_section_phi(p.section, v_range);
  const double kb = plane_section_curvature(p.section, phi.domain);
  if (std::fabs(kb - p.a) > 1e-12) {
    throw ParamError("section curvature " + fmt_num(kb) + " does not match a = " + fmt_num(p.a));
  }
  SurfacePatch patch = build_parabolic(fp, phi);
  patch.label = "parabolic-mt(a=" + fmt_num(p.a) + ", b=" + fmt_num(p.b) + ", c=" + fmt_num(p.c) +
                ", sign=" + to_string(p.sign) + ", " + phi.phi.label + ")";
  return patch;
}

SurfacePatch mt_cone_patch(double a, double b, const ProfileCurvePhi& phi, Interval u_range) {
  if (!(a < 0.0)) throw ParamError("cone family requires a < 0 (got a = " + fmt_num(a) + ")");
  constexpr int kSamples = 65;
  const double target = -1.0 / (2.0 * a);
  double worst = 0.0;
  double worst_v = phi.domain.lo;
  for (int j = 0; j < kSamples; ++j) {
    const double v = phi.domain.sample(j, kSamples);
    const double kb = kappa_bar(phi, v);
    const double dev = std::fabs(kb * kb - target);
    if (dev > worst) {
      worst = dev;
      worst_v = v;
    }
  }
  if (worst > 1e-9) {
    throw CurvatureMismatch("cone family requires kappa_bar^2 = -1/(2a); max |kappa_bar^2 + 1/(2a)| = " +
                            fmt_num(worst) + " at v = " + fmt_num(worst_v));
  }
  ProfilePair fp{profiles::identity(), profiles::linear(a, b), u_range};
  fp.f.label = "u";
  SurfacePatch patch = build_parabolic(fp, phi);
  patch.label = "parabolic-cone(a=" + fmt_num(a) + ", b=" + fmt_num(b) + ", phi=" + phi.phi.label + ")";
  return patch;
}

Vec4M paraboloid_point(double w1, double w2) {
  return from_null_frame(NullFrameCoords{w1 * std::cos(w2), w1 * std::sin(w2), 0.5 * w1 * w1, 1.0});
}

CbarFrenet cbar_frenet(const ProfileCurvePhi& phi, double v) {
  const Jet2 t = Jet2::seed_u(v);
  const Jet2 p = phi.phi(t);
  if (!(p.du * p.du + p.val * p.val > 0.0)) inadmissible("phi'(v)^2 + phi(v)^2 > 0", "v", v);
  const Jet2Vec4 curve = from_null_frame(p * cos(t), p * sin(t), 0.5 * (p * p), Jet2::constant(1.0));
  const Vec4M r1 = curve.du();
  const Vec4M r2 = curve.duu();
  const double speed2 = inner(r1, r1);
  CbarFrenet out;
  out.z = curve.val();
  out.t = r1 / std::sqrt(speed2);
  const Vec4M accel = (r2 - inner(r2, out.t) * out.t) / speed2;
  // Spacelike unit normal: the quarter turn of t within span{e1, e2}.
  const Vec4M rot{out.t.x2, -out.t.x1, 0.0, 0.0};
  const Vec4M rot_unit = rot / std::sqrt(inner(rot, rot));
  out.kappa = inner(accel, rot_unit);
  out.n = out.kappa != 0.0 ? accel / out.kappa : rot_unit;
  return out;
}

std::pair<Vec4M, Vec4M> meridian_plane(const ProfileCurvePhi& phi, double v0) {
  return {xi1, paraboloid_point(phi.phi.at(v0).val, v0)};
}

ParabolicClosedForm parabolic_closed_form(const ParabolicFamily& fam, double u, double v) {
  const Jet2 f = fam.profile.f.at(u);
  const Jet2 g = fam.profile.g.at(u);
  const Jet2 p = fam.phi.phi.at(v);
  const double fd = f.du, gd = g.du;
  const double q = p.du * p.du + p.val * p.val;
  const double sq = std::sqrt(q);
  const double fg = -2.0 * fd * gd;
  const double sfg = std::sqrt(fg);
  const double cv = std::cos(v), sv = std::sin(v);

  ParabolicClosedForm cf;
  cf.E = fg;
  cf.F = 0.0;
  cf.G = f.val * f.val * q;
  cf.kappa_m = (fd * g.duu - gd * f.duu) / (fg * sfg);
  const double phi_num = p.val * p.duu - 2.0 * p.du * p.du - p.val * p.val;
  cf.kappa_bar = phi_num / (q * sq);
  cf.L = 0.0;
  cf.N = 0.0;
  // κ_m changes sign with the direction of u; the frame below fixes it through sgn f′.
  const double sf = fd > 0.0 ? 1.0 : -1.0;
  const double ratio = std::fabs(fd) / (f.val * sfg);
  cf.M_opposite_n2 = (fd * g.duu - gd * f.duu) / (2.0 * fd * gd) * (phi_num / q);
  cf.H2_opposite_n2 = -0.5 * (cf.kappa_m + ratio);
  cf.M = -sf * cf.M_opposite_n2;
  cf.k = -cf.kappa_m * cf.kappa_m * cf.kappa_bar * cf.kappa_bar / (f.val * f.val);
  cf.kappa = 0.0;
  cf.K = -sf * cf.kappa_m * ratio;
  cf.H1 = cf.kappa_bar / (2.0 * f.val);
  cf.H2 = 0.5 * (sf * cf.kappa_m + ratio);
  cf.frame.n1 = from_null_frame(NullFrameCoords{p.du * sv + p.val * cv, -p.du * cv + p.val * sv,
                                                p.val * p.val, 0.0}) / sq;
  cf.frame.n2 = std::sqrt(-fd / (2.0 * gd)) *
                from_null_frame(NullFrameCoords{p.val * cv, p.val * sv,
                                                (fd * p.val * p.val - 2.0 * gd) / (2.0 * fd), 1.0});
  cf.H = cf.H1 * cf.frame.n1 + cf.H2 * cf.frame.n2;
  return cf;
}

}  // namespace meridian
