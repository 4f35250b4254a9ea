#pragma once

#include <optional>
#include <utility>

#include "meridian/minkowski.hpp"
#include "meridian/profile.hpp"
#include "meridian/surface.hpp"

namespace meridian {

/// Choice of sign in a ± formula; Plus selects the upper sign.
enum class Branch { Plus, Minus };

constexpr double sign_of(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }
const char* to_string(Branch b);

/// Plane section (w¹)²/2 + (A cos w² + B sin w²) w¹ + C = 0 of the paraboloid,
/// solved for w¹ = φ(w²) with the given root.
struct SectionParams {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  Branch root = Branch::Plus;

  double discriminant() const { return A * A + B * B - 2.0 * C; }
};

/// Marginally trapped family of the general type: f = u, g from the closed
/// form, φ generated by a plane section with constant curvature a.
struct MTFamilyParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  Branch sign = Branch::Plus;
  SectionParams section;
};

// Admissibility checks over `samples` equally spaced points of the domain.
// Each throws AdmissibilityError naming the violated inequality and the point.
void check_parabolic_admissible(const ProfilePair& fp, int samples = 65);
void check_elliptic_admissible(const ProfilePair& fp, int samples = 65);
void check_hyperbolic_admissible(const ProfilePair& fp, int samples = 65);
void check_phi_admissible(const ProfileCurvePhi& phi, int samples = 65);

/// z = fφ cos v·e1 + fφ sin v·e2 + (fφ²/2 + g)·ξ1 + f·ξ2.
SurfacePatch build_parabolic(const ProfilePair& fp, const ProfileCurvePhi& phi);

/// Meridian surface on the rotational hypersurface with timelike axis:
/// z = f cos w¹ cos w²·e1 + f cos w¹ sin w²·e2 + f sin w¹·e3 + g·e4.
SurfacePatch build_elliptic(const ProfilePair& fp, const Profile1D& w1, const Profile1D& w2,
                            Interval v_range);

/// Meridian surface on the rotational hypersurface with spacelike axis:
/// z = g·e1 + f cosh w¹ cos w²·e2 + f cosh w¹ sin w²·e3 + f sinh w¹·e4.
SurfacePatch build_hyperbolic(const ProfilePair& fp, const Profile1D& w1, const Profile1D& w2,
                              Interval v_range);

/// Curvature of the meridian c_u: (f′g″ − g′f″)/(−2f′g′)^{3/2}.
double kappa_m(const ProfilePair& fp, double u);

/// Curvature of the generating curve: (φφ̈ − 2φ̇² − φ²)/(φ̇² + φ²)^{3/2}.
double kappa_bar(const ProfileCurvePhi& phi, double v);

/// Pole u* where c ∓ au vanishes.
double mt_pole(double a, double c, Branch sign);

/// Default u-range for the general family: [0.2, 3] unless the pole falls
/// inside, in which case a range beyond the pole.
Interval mt_default_u_range(double a, double c, Branch sign);

/// f(u) = u, g(u) = (±1/2a³)((a²u² ∓ 2auc)/(c ∓ au) − 2c ln|c ∓ au| + b).
///
/// Throws ParamError when a or c vanish, or when the requested range reaches
/// u ≤ 0 or the pole neighbourhood of radius max(1e−6, 1e−3·|u*|).
ProfilePair mt_general_profile(const MTFamilyParams& p, std::optional<Interval> u_range = {});

/// φ for the section (θ = A cos v + B sin v). The default domain is one arc
/// where θ² − 2C ≥ 1e−12 and φ ≠ 0, preferring the arc with φ > 0, trimmed by
/// 1% of its width at each end. A caller-supplied range must lie inside a
/// single admissible arc.
ProfileCurvePhi plane_section_phi(const SectionParams& s, std::optional<Interval> v_range = {});

/// Constant curvature of the section traced on the arc chosen by
/// plane_section_phi: ∓sgn(φ)/√(A² + B² − 2C), upper sign for the Plus root.
double plane_section_curvature(const SectionParams& s, std::optional<Interval> v_range = {});

/// Complete marginally trapped surface of the general type. The section's
/// curvature must equal a to 1e−12 (ParamError otherwise).
SurfacePatch mt_general_patch(const MTFamilyParams& p, std::optional<Interval> u_range = {},
                              std::optional<Interval> v_range = {});

/// Developable (cone) family f = u, g = au + b. Requires a < 0 and
/// κ̄² = −1/(2a) along φ (CurvatureMismatch otherwise).
SurfacePatch mt_cone_patch(double a, double b, const ProfileCurvePhi& phi,
                           Interval u_range = {0.1, 3.0});

/// Point of the paraboloid w¹ cos w²·e1 + w¹ sin w²·e2 + ((w¹)²/2)·ξ1 + ξ2.
Vec4M paraboloid_point(double w1, double w2);

struct CbarFrenet {
  Vec4M z;     // z̄(v), on the paraboloid
  Vec4M t;     // unit tangent
  Vec4M n;     // unit principal normal, spacelike
  double kappa = 0.0;  // signed curvature, computed from the curve
};

/// Frenet data of c̄: z̄(v) = paraboloid_point(φ(v), v).
CbarFrenet cbar_frenet(const ProfileCurvePhi& phi, double v);

/// Spanning pair (ξ1, z̄(v0)) of the lightlike plane containing the meridian at v0.
std::pair<Vec4M, Vec4M> meridian_plane(const ProfileCurvePhi& phi, double v0);

/// The explicit closed forms for a meridian surface of parabolic type.
///
/// L, M, N, H1, H2 are coefficients in `frame`. With s = sgn f′:
///   M  = s·(g′f″ − f′g″)/(2f′g′) · (φφ̈ − φ² − 2φ̇²)/(φ̇² + φ²)
///   K  = −s·κ_m|f′|/(f√(−2f′g′))
///   H2 = (s·κ_m + |f′|/(f√(−2f′g′)))/2
/// For f′ > 0 the variants without s and with the opposite sign of M and H2
/// are the coefficients in the frame {n1, −n2}; they are kept for comparison.
struct ParabolicClosedForm {
  double E = 0.0, F = 0.0, G = 0.0;
  double L = 0.0, M = 0.0, N = 0.0;
  double kappa_m = 0.0;
  double kappa_bar = 0.0;
  double k = 0.0;
  double kappa = 0.0;
  double K = 0.0;
  double H1 = 0.0, H2 = 0.0;
  Vec4M H;
  double M_opposite_n2 = 0.0;
  double H2_opposite_n2 = 0.0;
  NormalFrame frame;  // the explicit normal frame of the family
};

ParabolicClosedForm parabolic_closed_form(const ParabolicFamily& fam, double u, double v);

}  // namespace meridian
