#pragma once

#include <array>
#include <cmath>

#include "meridian/minkowski.hpp"

namespace meridian {

/// Second-order truncated Taylor value in two variables (u, v).
///
/// Carries the value and the partials ∂u, ∂v, ∂uu, ∂uv, ∂vv. The mixed
/// partial has a single slot; every rule below is written so that exchanging
/// the roles of u and v reproduces duv bit for bit.
struct Jet2 {
  double val = 0.0;
  double du = 0.0;
  double dv = 0.0;
  double duu = 0.0;
  double duv = 0.0;
  double dvv = 0.0;

  static constexpr Jet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
  static constexpr Jet2 seed_u(double u) { return {u, 1, 0, 0, 0, 0}; }
  static constexpr Jet2 seed_v(double v) { return {v, 0, 1, 0, 0, 0}; }

  constexpr Jet2& operator+=(const Jet2& b) {
    val += b.val;
    du += b.du;
    dv += b.dv;
    duu += b.duu;
    duv += b.duv;
    dvv += b.dvv;
    return *this;
  }
  constexpr Jet2& operator-=(const Jet2& b) {
    val -= b.val;
    du -= b.du;
    dv -= b.dv;
    duu -= b.duu;
    duv -= b.duv;
    dvv -= b.dvv;
    return *this;
  }
  constexpr Jet2& operator*=(double s) {
    val *= s;
    du *= s;
    dv *= s;
    duu *= s;
    duv *= s;
    dvv *= s;
    return *this;
  }

  friend constexpr bool operator==(const Jet2&, const Jet2&) = default;
};

constexpr Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
constexpr Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
constexpr Jet2 operator-(const Jet2& a) { return {-a.val, -a.du, -a.dv, -a.duu, -a.duv, -a.dvv}; }
constexpr Jet2 operator*(Jet2 a, double s) { return a *= s; }
constexpr Jet2 operator*(double s, Jet2 a) { return a *= s; }
constexpr Jet2 operator+(Jet2 a, double s) {
  a.val += s;
  return a;
}
constexpr Jet2 operator+(double s, Jet2 a) { return a + s; }
constexpr Jet2 operator-(Jet2 a, double s) {
  a.val -= s;
  return a;
}
constexpr Jet2 operator-(double s, const Jet2& a) { return -a + s; }

constexpr Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.val * b.val,
          a.du * b.val + a.val * b.du,
          a.dv * b.val + a.val * b.dv,
          a.duu * b.val + 2.0 * (a.du * b.du) + a.val * b.duu,
          a.duv * b.val + (a.du * b.dv + a.dv * b.du) + a.val * b.duv,
          a.dvv * b.val + 2.0 * (a.dv * b.dv) + a.val * b.dvv};
}

/// Chain rule for a scalar function with value f0, first derivative f1 and
/// second derivative f2 at x.val.
constexpr Jet2 compose(const Jet2& x, double f0, double f1, double f2) {
  return {f0,
          f1 * x.du,
          f1 * x.dv,
          f2 * (x.du * x.du) + f1 * x.duu,
          f2 * (x.du * x.dv) + f1 * x.duv,
          f2 * (x.dv * x.dv) + f1 * x.dvv};
}

enum class ElementaryFn { Sin, Cos, Sqrt, Ln, Exp, Pow, Reciprocal };

/// Applies an elementary function; `exponent` is used only by Pow.
/// Throws DomainError when x.val is outside the function's domain.
Jet2 jet_apply(ElementaryFn fn, const Jet2& x, double exponent = 1.0);

Jet2 sin(const Jet2& x);
Jet2 cos(const Jet2& x);
Jet2 sqrt(const Jet2& x);
Jet2 log(const Jet2& x);
Jet2 exp(const Jet2& x);
Jet2 pow(const Jet2& x, double p);
Jet2 reciprocal(const Jet2& x);
/// |x| for x.val ≠ 0 (sign of the value applied to every slot).
Jet2 abs(const Jet2& x);

Jet2 operator/(const Jet2& a, const Jet2& b);
Jet2 operator/(double s, const Jet2& b);
inline Jet2 operator/(Jet2 a, double s) { return a *= (1.0 / s); }

/// Four jets: a point of ℝ⁴₁ together with its partials.
struct Jet2Vec4 {
  std::array<Jet2, 4> c{};

  Vec4M val() const { return {c[0].val, c[1].val, c[2].val, c[3].val}; }
  Vec4M du() const { return {c[0].du, c[1].du, c[2].du, c[3].du}; }
  Vec4M dv() const { return {c[0].dv, c[1].dv, c[2].dv, c[3].dv}; }
  Vec4M duu() const { return {c[0].duu, c[1].duu, c[2].duu, c[3].duu}; }
  Vec4M duv() const { return {c[0].duv, c[1].duv, c[2].duv, c[3].duv}; }
  Vec4M dvv() const { return {c[0].dvv, c[1].dvv, c[2].dvv, c[3].dvv}; }
};

/// z1·e1 + z2·e2 + η1·ξ1 + η2·ξ2 in jet arithmetic.
Jet2Vec4 from_null_frame(const Jet2& z1, const Jet2& z2, const Jet2& eta1, const Jet2& eta2);

}  // namespace meridian
