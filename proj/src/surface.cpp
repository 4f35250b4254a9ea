#include "meridian/surface.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "meridian/errors.hpp"

namespace meridian {

const char* to_string(PatchFamily f) {
  switch (f) {
    case PatchFamily::Generic:
      return "generic";
    case PatchFamily::Elliptic:
      return "elliptic";
    case PatchFamily::Hyperbolic:
      return "hyperbolic";
    case PatchFamily::Parabolic:
      return "parabolic";
  }
  return "?";
}

bool SurfacePatch::contains(double u, double v) const {
  return u_range.contains(u) && v_range.contains(v);
}

Jet2Vec4 jet_eval_surface(const SurfacePatch& patch, double u, double v) {
  if (!patch.contains(u, v)) {
    std::ostringstream os;
    os << "point (" << u << ", " << v << ") outside the domain of patch '" << patch.label << "'";
    throw DomainError(os.str());
  }
  return patch.immersion(Jet2::seed_u(u), Jet2::seed_v(v));
}

SurfaceDerivatives derivatives(const Jet2Vec4& z) {
  return {z.val(), z.du(), z.dv(), z.duu(), z.duv(), z.dvv()};
}

namespace {

struct Tangent {
  Vec4M z_u, z_v;
  double E, F, G, det;

  Vec4M remove_tangential(const Vec4M& w) const {
    const double a = inner(w, z_u);
    const double b = inner(w, z_v);
    const double alpha = (G * a - F * b) / det;
    const double beta = (E * b - F * a) / det;
    return w - alpha * z_u - beta * z_v;
  }

  // Two passes keep the residual tangential part at roundoff level.
  Vec4M normal_part(const Vec4M& w) const { return remove_tangential(remove_tangential(w)); }
};

Tangent make_tangent(const Vec4M& z_u, const Vec4M& z_v) {
  const double E = inner(z_u, z_u);
  const double F = inner(z_u, z_v);
  const double G = inner(z_v, z_v);
  const double det = E * G - F * F;
  if (!(E > 0.0) || !(det > 0.0)) {
    std::ostringstream os;
    os << "tangent plane is not spacelike (E = " << E << ", EG - F^2 = " << det << ")";
    throw NotSpacelike(os.str());
  }
  return {z_u, z_v, E, F, G, det};
}

}  // namespace

NormalFrame normal_frame(const Vec4M& z_u, const Vec4M& z_v) {
  const Tangent t = make_tangent(z_u, z_v);

  // ⟨p, p⟩ = −1 − ⟨tangential part, tangential part⟩ ≤ −1 for p the normal part of e4.
  const Vec4M p4 = t.normal_part(e4);
  const double q4 = inner(p4, p4);
  if (!(q4 < 0.0)) throw DegenerateFrame("normal plane contains no timelike direction");
  Vec4M n2 = p4 / std::sqrt(-q4);
  if (inner(n2, e4) > 0.0) n2 = -n2;

  // n1 is unique up to sign; take the candidate with the largest spacelike residual.
  Vec4M best;
  double best_q = 0.0;
  for (const Vec4M& w : {e3, e1, e2}) {
    Vec4M q = t.normal_part(w);
    q += inner(q, n2) * n2;
    const double qq = inner(q, q);
    if (qq > best_q) {
      best_q = qq;
      best = q;
    }
    if (qq > 0.25) break;
  }
  if (!(best_q > 1e-24)) throw DegenerateFrame("could not isolate a spacelike normal direction");
  best = t.normal_part(best);
  best += inner(best, n2) * n2;
  Vec4M n1 = best / std::sqrt(inner(best, best));
  if (det4(z_u, z_v, n1, n2) < 0.0) n1 = -n1;
  return {n1, n2};
}

PointData point_data(const SurfaceDerivatives& d) { return point_data(d, normal_frame(d.z_u, d.z_v)); }

PointData point_data(const SurfaceDerivatives& d, const NormalFrame& frame) {
  const Tangent t = make_tangent(d.z_u, d.z_v);
  PointData p;
  p.z = d.z;
  p.z_u = d.z_u;
  p.z_v = d.z_v;
  p.z_uu = d.z_uu;
  p.z_uv = d.z_uv;
  p.z_vv = d.z_vv;
  p.E = t.E;
  p.F = t.F;
  p.G = t.G;
  const double w2 = t.det;
  p.W = std::sqrt(w2);
  const double sqrtE = std::sqrt(p.E);
  p.x = d.z_u / sqrtE;
  p.y = (p.E * d.z_v - p.F * d.z_u) / (p.W * sqrtE);
  p.n1 = frame.n1;
  p.n2 = frame.n2;

  p.c11_1 = inner(d.z_uu, p.n1);
  p.c12_1 = inner(d.z_uv, p.n1);
  p.c22_1 = inner(d.z_vv, p.n1);
  p.c11_2 = inner(d.z_uu, p.n2);
  p.c12_2 = inner(d.z_uv, p.n2);
  p.c22_2 = inner(d.z_vv, p.n2);

  p.L = (2.0 / p.W) * (p.c11_1 * p.c12_2 - p.c12_1 * p.c11_2);
  p.M = (1.0 / p.W) * (p.c11_1 * p.c22_2 - p.c22_1 * p.c11_2);
  p.N = (2.0 / p.W) * (p.c12_1 * p.c22_2 - p.c22_1 * p.c12_2);
  p.k = (p.L * p.N - p.M * p.M) / w2;
  p.kappa = (p.E * p.N + p.G * p.L - 2.0 * p.F * p.M) / (2.0 * w2);

  // Gauss equation with σ(z_i, z_j) = c_ij^1 n1 − c_ij^2 n2 and ⟨n2, n2⟩ = −1.
  const double s11_22 = p.c11_1 * p.c22_1 - p.c11_2 * p.c22_2;
  const double s12_12 = p.c12_1 * p.c12_1 - p.c12_2 * p.c12_2;
  p.K = (s11_22 - s12_12) / w2;

  p.H1 = (p.G * p.c11_1 - 2.0 * p.F * p.c12_1 + p.E * p.c22_1) / (2.0 * w2);
  p.H2 = -(p.G * p.c11_2 - 2.0 * p.F * p.c12_2 + p.E * p.c22_2) / (2.0 * w2);
  p.H = p.H1 * p.n1 + p.H2 * p.n2;
  return p;
}

PointData point_data(const SurfacePatch& patch, double u, double v) {
  PointData p = point_data(derivatives(jet_eval_surface(patch, u, v)));
  p.u = u;
  p.v = v;
  return p;
}

Vec4M second_fundamental(const PointData& p, const Vec4M& X, const Vec4M& Y) {
  const double w2 = p.W * p.W;
  auto coords = [&](const Vec4M& T) {
    const double a = inner(T, p.z_u);
    const double b = inner(T, p.z_v);
    return std::array<double, 2>{(p.G * a - p.F * b) / w2, (p.E * b - p.F * a) / w2};
  };
  const auto [l1, m1] = coords(X);
  const auto [l2, m2] = coords(Y);
  const Vec4M s11 = p.c11_1 * p.n1 - p.c11_2 * p.n2;
  const Vec4M s12 = p.c12_1 * p.n1 - p.c12_2 * p.n2;
  const Vec4M s22 = p.c22_1 * p.n1 - p.c22_2 * p.n2;
  return (l1 * l2) * s11 + (l1 * m2 + m1 * l2) * s12 + (m1 * m2) * s22;
}

bool is_marginally_trapped(const PointData& p, double tol) {
  return causal_character(p.H, tol) == CausalCharacter::Lightlike;
}

PointClass classify_point(const PointData& p, double tol) {
  if (std::fmax(std::fabs(p.L), std::fmax(std::fabs(p.M), std::fabs(p.N))) <= tol)
    return {PointKind::FlatPoint, std::nullopt};
  if (p.k < -tol) return {PointKind::Regular, 2};
  if (p.k > tol) return {PointKind::Regular, 0};
  return {PointKind::Regular, 1};
}

}  // namespace meridian
