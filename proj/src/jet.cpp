#include "meridian/jet.hpp"

#include <string>

#include "meridian/errors.hpp"

namespace meridian {

namespace {

[[noreturn]] void domain_fail(const char* fn, double x) {
  throw DomainError(std::string(fn) + ": argument " + std::to_string(x) + " outside domain");
}

}  // namespace

Jet2 jet_apply(ElementaryFn fn, const Jet2& x, double exponent) {
  const double t = x.val;
  switch (fn) {
    case ElementaryFn::Sin: {
      const double s = std::sin(t);
      return compose(x, s, std::cos(t), -s);
    }
    case ElementaryFn::Cos: {
      const double c = std::cos(t);
      return compose(x, c, -std::sin(t), -c);
    }
    case ElementaryFn::Sqrt: {
      if (!(t > 0.0)) domain_fail("sqrt", t);
      const double r = std::sqrt(t);
      const double d1 = 0.5 / r;
      return compose(x, r, d1, -0.5 * d1 / t);
    }
    case ElementaryFn::Ln: {
      if (!(t > 0.0)) domain_fail("ln", t);
      const double inv = 1.0 / t;
      return compose(x, std::log(t), inv, -inv * inv);
    }
    case ElementaryFn::Exp: {
      const double e = std::exp(t);
      return compose(x, e, e, e);
    }
    case ElementaryFn::Pow: {
      const double p = exponent;
      const bool integral = std::nearbyint(p) == p;
      if (integral ? (p < 0.0 && t == 0.0) : !(t > 0.0)) domain_fail("pow", t);
      if (p == 0.0) return Jet2::constant(1.0);
      if (p == 1.0) return x;
      const double v2 = std::pow(t, p - 2.0);
      const double v1 = v2 * t;
      return compose(x, v1 * t, p * v1, p * (p - 1.0) * v2);
    }
    case ElementaryFn::Reciprocal: {
      if (t == 0.0) domain_fail("reciprocal", t);
      const double inv = 1.0 / t;
      const double inv2 = inv * inv;
      return compose(x, inv, -inv2, 2.0 * inv2 * inv);
    }
  }
  throw DomainError("jet_apply: unknown function tag");
}

Jet2 sin(const Jet2& x) { return jet_apply(ElementaryFn::Sin, x); }
Jet2 cos(const Jet2& x) { return jet_apply(ElementaryFn::Cos, x); }
Jet2 sqrt(const Jet2& x) { return jet_apply(ElementaryFn::Sqrt, x); }
Jet2 log(const Jet2& x) { return jet_apply(ElementaryFn::Ln, x); }
Jet2 exp(const Jet2& x) { return jet_apply(ElementaryFn::Exp, x); }
Jet2 pow(const Jet2& x, double p) { return jet_apply(ElementaryFn::Pow, x, p); }
Jet2 reciprocal(const Jet2& x) { return jet_apply(ElementaryFn::Reciprocal, x); }

Jet2 abs(const Jet2& x) {
  if (x.val == 0.0) domain_fail("abs", 0.0);
  return x.val < 0.0 ? -x : x;
}

Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }
Jet2 operator/(double s, const Jet2& b) { return s * reciprocal(b); }

Jet2Vec4 from_null_frame(const Jet2& z1, const Jet2& z2, const Jet2& eta1, const Jet2& eta2) {
  return {{z1, z2, (eta1 - eta2) * kInvSqrt2, (eta1 + eta2) * kInvSqrt2}};
}

}  // namespace meridian
