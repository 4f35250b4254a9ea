#pragma once

#include <functional>
#include <optional>
#include <string>

#include "meridian/jet.hpp"
#include "meridian/minkowski.hpp"
#include "meridian/profile.hpp"

namespace meridian {

enum class PatchFamily { Generic, Elliptic, Hyperbolic, Parabolic };

const char* to_string(PatchFamily f);

using Immersion = std::function<Jet2Vec4(const Jet2& u, const Jet2& v)>;

/// An immersion (u, v) ↦ ℝ⁴₁ over a rectangle, evaluable in jet arithmetic.
struct SurfacePatch {
  Immersion immersion;
  Interval u_range;
  Interval v_range;
  std::string label;
  PatchFamily family = PatchFamily::Generic;
  /// Present for meridian surfaces of parabolic type; closed-form checks read it.
  std::optional<ParabolicFamily> parabolic;

  bool contains(double u, double v) const;
};

/// z and its partial derivatives up to order two at one parameter point.
struct SurfaceDerivatives {
  Vec4M z, z_u, z_v, z_uu, z_uv, z_vv;
};

/// {n1, n2} with ⟨n1,n1⟩ = 1, ⟨n2,n2⟩ = −1.
struct NormalFrame {
  Vec4M n1;
  Vec4M n2;
};

struct PointData {
  double u = 0.0;
  double v = 0.0;
  Vec4M z, z_u, z_v, z_uu, z_uv, z_vv;
  double E = 0.0, F = 0.0, G = 0.0, W = 0.0;
  Vec4M x, y;  // orthonormal tangent frame, x ∥ z_u
  Vec4M n1, n2;
  double c11_1 = 0.0, c12_1 = 0.0, c22_1 = 0.0;
  double c11_2 = 0.0, c12_2 = 0.0, c22_2 = 0.0;
  double L = 0.0, M = 0.0, N = 0.0;
  double k = 0.0;
  double kappa = 0.0;  // normal curvature ϰ
  double K = 0.0;
  Vec4M H;
  double H1 = 0.0, H2 = 0.0;  // H = H1·n1 + H2·n2
};

enum class PointKind { FlatPoint, Regular };

struct PointClass {
  PointKind kind = PointKind::Regular;
  /// Number of asymptotic tangents; empty at a flat point.
  std::optional<int> asymptotic_tangents;
};

/// Throws DomainError outside the patch rectangle.
Jet2Vec4 jet_eval_surface(const SurfacePatch& patch, double u, double v);

SurfaceDerivatives derivatives(const Jet2Vec4& z);

/// Positively oriented normal frame of a spacelike tangent plane.
///
/// n2 is the normalized projection of e4 onto the normal plane, oriented so
/// that ⟨n2, e4⟩ < 0; n1 completes it with det[z_u | z_v | n1 | n2] > 0.
/// Throws NotSpacelike for a non-spacelike tangent plane and DegenerateFrame
/// when no spacelike normal direction can be isolated.
NormalFrame normal_frame(const Vec4M& z_u, const Vec4M& z_v);

PointData point_data(const SurfacePatch& patch, double u, double v);
PointData point_data(const SurfaceDerivatives& d);
/// Same, but with a caller-supplied normal frame (used for frame-flip checks
/// and for comparing against explicit frames).
PointData point_data(const SurfaceDerivatives& d, const NormalFrame& frame);

/// σ(X, Y) for tangent vectors X, Y at the point.
Vec4M second_fundamental(const PointData& p, const Vec4M& X, const Vec4M& Y);

bool is_marginally_trapped(const PointData& p, double tol);
PointClass classify_point(const PointData& p, double tol);

}  // namespace meridian
