#pragma once

#include <array>
#include <cmath>
#include <iosfwd>
#include <numbers>

namespace meridian {

/// A vector of ℝ⁴₁ in the orthonormal basis {e1, e2, e3, e4}, e4 timelike.
struct Vec4M {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
  double x4 = 0.0;

  constexpr double operator[](int i) const {
    return i == 0 ? x1 : i == 1 ? x2 : i == 2 ? x3 : x4;
  }

  constexpr Vec4M& operator+=(const Vec4M& o) {
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    x4 += o.x4;
    return *this;
  }
  constexpr Vec4M& operator-=(const Vec4M& o) {
    x1 -= o.x1;
    x2 -= o.x2;
    x3 -= o.x3;
    x4 -= o.x4;
    return *this;
  }
  constexpr Vec4M& operator*=(double s) {
    x1 *= s;
    x2 *= s;
    x3 *= s;
    x4 *= s;
    return *this;
  }

  friend constexpr Vec4M operator+(Vec4M a, const Vec4M& b) { return a += b; }
  friend constexpr Vec4M operator-(Vec4M a, const Vec4M& b) { return a -= b; }
  friend constexpr Vec4M operator-(const Vec4M& a) { return {-a.x1, -a.x2, -a.x3, -a.x4}; }
  friend constexpr Vec4M operator*(double s, Vec4M a) { return a *= s; }
  friend constexpr Vec4M operator*(Vec4M a, double s) { return a *= s; }
  friend constexpr Vec4M operator/(Vec4M a, double s) { return a *= (1.0 / s); }
  friend constexpr bool operator==(const Vec4M&, const Vec4M&) = default;
};

std::ostream& operator<<(std::ostream& os, const Vec4M& v);

/// Coordinates with respect to the pseudo-orthonormal basis {e1, e2, ξ1, ξ2}.
struct NullFrameCoords {
  double z1 = 0.0;
  double z2 = 0.0;
  double eta1 = 0.0;
  double eta2 = 0.0;

  friend constexpr bool operator==(const NullFrameCoords&, const NullFrameCoords&) = default;
};

enum class CausalCharacter { Spacelike, Timelike, Lightlike, Zero };

const char* to_string(CausalCharacter c);

inline constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

inline constexpr Vec4M e1{1.0, 0.0, 0.0, 0.0};
inline constexpr Vec4M e2{0.0, 1.0, 0.0, 0.0};
inline constexpr Vec4M e3{0.0, 0.0, 1.0, 0.0};
inline constexpr Vec4M e4{0.0, 0.0, 0.0, 1.0};
/// ξ1 = (e3 + e4)/√2, ξ2 = (−e3 + e4)/√2; both lightlike, ⟨ξ1, ξ2⟩ = −1.
inline constexpr Vec4M xi1{0.0, 0.0, kInvSqrt2, kInvSqrt2};
inline constexpr Vec4M xi2{0.0, 0.0, -kInvSqrt2, kInvSqrt2};

/// Signature (+,+,+,−), summed left to right.
constexpr double inner(const Vec4M& a, const Vec4M& b) {
  return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3 - a.x4 * b.x4;
}

inline double euclidean_norm(const Vec4M& v) {
  return std::sqrt(v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3 + v.x4 * v.x4);
}

inline double max_abs(const Vec4M& v) {
  return std::fmax(std::fmax(std::fabs(v.x1), std::fabs(v.x2)),
                   std::fmax(std::fabs(v.x3), std::fabs(v.x4)));
}

bool is_finite(const Vec4M& v);

/// Zero if |v| ≤ tol, Lightlike if |⟨v,v⟩| ≤ tol·|v|², otherwise by the sign of ⟨v,v⟩.
CausalCharacter causal_character(const Vec4M& v, double tol);

NullFrameCoords to_null_frame(const Vec4M& v);
Vec4M from_null_frame(const NullFrameCoords& c);

/// Determinant of the 4×4 matrix with columns a, b, c, d.
double det4(const Vec4M& a, const Vec4M& b, const Vec4M& c, const Vec4M& d);

}  // namespace meridian
