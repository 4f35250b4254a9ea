#include "meridian/minkowski.hpp"

#include <ostream>

#include "meridian/errors.hpp"

namespace meridian {

std::ostream& operator<<(std::ostream& os, const Vec4M& v) {
  return os << '(' << v.x1 << ", " << v.x2 << ", " << v.x3 << ", " << v.x4 << ')';
}

const char* to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Spacelike:
      return "spacelike";
    case CausalCharacter::Timelike:
      return "timelike";
    case CausalCharacter::Lightlike:
      return "lightlike";
    case CausalCharacter::Zero:
      return "zero";
  }
  return "?";
}

bool is_finite(const Vec4M& v) {
  return std::isfinite(v.x1) && std::isfinite(v.x2) && std::isfinite(v.x3) && std::isfinite(v.x4);
}

CausalCharacter causal_character(const Vec4M& v, double tol) {
  if (!(tol > 0.0)) throw UsageError("causal_character: tolerance must be positive");
  const double norm = euclidean_norm(v);
  if (norm <= tol) return CausalCharacter::Zero;
  const double q = inner(v, v);
  if (std::fabs(q) <= tol * norm * norm) return CausalCharacter::Lightlike;
  return q > 0.0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

// x3 = (η1 − η2)/√2, x4 = (η1 + η2)/√2 and its inverse.
NullFrameCoords to_null_frame(const Vec4M& v) {
  return {v.x1, v.x2, (v.x3 + v.x4) * kInvSqrt2, (v.x4 - v.x3) * kInvSqrt2};
}

Vec4M from_null_frame(const NullFrameCoords& c) {
  return {c.z1, c.z2, (c.eta1 - c.eta2) * kInvSqrt2, (c.eta1 + c.eta2) * kInvSqrt2};
}

double det4(const Vec4M& a, const Vec4M& b, const Vec4M& c, const Vec4M& d) {
  // Laplace expansion over 2×2 minors of the first two columns.
  auto m = [](const Vec4M& p, const Vec4M& q, int i, int j) { return p[i] * q[j] - p[j] * q[i]; };
  return m(a, b, 0, 1) * m(c, d, 2, 3) - m(a, b, 0, 2) * m(c, d, 1, 3) +
         m(a, b, 0, 3) * m(c, d, 1, 2) + m(a, b, 1, 2) * m(c, d, 0, 3) -
         m(a, b, 1, 3) * m(c, d, 0, 2) + m(a, b, 2, 3) * m(c, d, 0, 1);
}

}  // namespace meridian
