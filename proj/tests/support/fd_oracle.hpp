#pragma once

// Finite-difference reference for surface invariants. Shares no code with the
// jet engine or with point_data: derivatives come from stencils on plain
// double evaluations and the normal frame is built by Gram-Schmidt from a
// different seed.

#include <array>
#include <cmath>
#include <functional>

namespace fd {

using V4 = std::array<double, 4>;
using Surface = std::function<V4(double, double)>;

inline double dot(const V4& a, const V4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] - a[3] * b[3]; }
inline V4 add(const V4& a, const V4& b, double s = 1.0) {
  return {a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2], a[3] + s * b[3]};
}
inline V4 scale(const V4& a, double s) { return {s * a[0], s * a[1], s * a[2], s * a[3]}; }

inline double det4(const V4& a, const V4& b, const V4& c, const V4& d) {
  // Plain cofactor expansion along the first column set.
  double m[4][4];
  for (int i = 0; i < 4; ++i) {
    m[i][0] = a[i];
    m[i][1] = b[i];
    m[i][2] = c[i];
    m[i][3] = d[i];
  }
  auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
           m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
           m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
  };
  return m[0][0] * det3(1, 2, 3, 1, 2, 3) - m[0][1] * det3(1, 2, 3, 0, 2, 3) + m[0][2] * det3(1, 2, 3, 0, 1, 3) -
         m[0][3] * det3(1, 2, 3, 0, 1, 2);
}

struct Derivs {
  V4 z, zu, zv, zuu, zuv, zvv;
};

inline constexpr double kStep = 1e-3;

// Five-point stencils: O(h⁴) truncation for all orders used here.
inline Derivs derivatives(const Surface& s, double u, double v, double h = kStep) {
  Derivs d;
  d.z = s(u, v);
  const V4 up1 = s(u + h, v), um1 = s(u - h, v), up2 = s(u + 2 * h, v), um2 = s(u - 2 * h, v);
  const V4 vp1 = s(u, v + h), vm1 = s(u, v - h), vp2 = s(u, v + 2 * h), vm2 = s(u, v - 2 * h);
  for (int i = 0; i < 4; ++i) {
    d.zu[i] = (-up2[i] + 8 * up1[i] - 8 * um1[i] + um2[i]) / (12 * h);
    d.zv[i] = (-vp2[i] + 8 * vp1[i] - 8 * vm1[i] + vm2[i]) / (12 * h);
    d.zuu[i] = (-up2[i] + 16 * up1[i] - 30 * d.z[i] + 16 * um1[i] - um2[i]) / (12 * h * h);
    d.zvv[i] = (-vp2[i] + 16 * vp1[i] - 30 * d.z[i] + 16 * vm1[i] - vm2[i]) / (12 * h * h);
  }
  // Mixed: the u-stencil applied to the v-stencil.
  const double wts[4] = {1.0, -8.0, 8.0, -1.0};
  const double offs[4] = {-2.0, -1.0, 1.0, 2.0};
  V4 mixed{0, 0, 0, 0};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mixed = add(mixed, s(u + offs[a] * h, v + offs[b] * h), wts[a] * wts[b]);
  d.zuv = scale(mixed, 1.0 / (144 * h * h));
  return d;
}

struct Invariants {
  double E, F, G, L, M, N, k, kappa, K;
  V4 H;
  double HdotH;
};

inline Invariants invariants(const Derivs& d) {
  Invariants r{};
  r.E = dot(d.zu, d.zu);
  r.F = dot(d.zu, d.zv);
  r.G = dot(d.zv, d.zv);
  const double W2 = r.E * r.G - r.F * r.F;
  const double W = std::sqrt(W2);
  // Normal part: subtract the tangent component using the inverse metric.
  auto normal_part = [&](const V4& w) {
    const double a = dot(w, d.zu), b = dot(w, d.zv);
    const double cu = (r.G * a - r.F * b) / W2, cv = (r.E * b - r.F * a) / W2;
    return add(add(w, d.zu, -cu), d.zv, -cv);
  };
  // Normal frame seeded from e4 + e1/2 (timelike) and then e2 + e3 (spacelike).
  V4 t = normal_part(V4{0.5, 0.0, 0.0, 1.0});
  const V4 n2 = scale(t, 1.0 / std::sqrt(-dot(t, t)));
  V4 s = normal_part(V4{0.0, 1.0, 1.0, 0.0});
  s = add(s, n2, dot(s, n2));  // ⟨n2,n2⟩ = −1
  V4 n1 = scale(s, 1.0 / std::sqrt(dot(s, s)));
  if (det4(d.zu, d.zv, n1, n2) < 0) n1 = scale(n1, -1.0);
  const V4 s11 = normal_part(d.zuu), s12 = normal_part(d.zuv), s22 = normal_part(d.zvv);
  const double c111 = dot(d.zuu, n1), c121 = dot(d.zuv, n1), c221 = dot(d.zvv, n1);
  const double c112 = dot(d.zuu, n2), c122 = dot(d.zuv, n2), c222 = dot(d.zvv, n2);
  r.L = 2.0 / W * (c111 * c122 - c121 * c112);
  r.M = 1.0 / W * (c111 * c222 - c221 * c112);
  r.N = 2.0 / W * (c121 * c222 - c221 * c122);
  r.k = (r.L * r.N - r.M * r.M) / W2;
  r.kappa = (r.E * r.N + r.G * r.L - 2 * r.F * r.M) / (2 * W2);
  r.K = (dot(s11, s22) - dot(s12, s12)) / W2;
  r.H = scale(add(add(scale(s11, r.G), s12, -2 * r.F), s22, r.E), 1.0 / (2 * W2));
  r.HdotH = dot(r.H, r.H);
  return r;
}

}  // namespace fd
