#pragma once

#include <functional>
#include <string>
#include <utility>

#include "meridian/jet.hpp"

namespace meridian {

/// Closed interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  constexpr double width() const { return hi - lo; }
  constexpr bool contains(double t) const { return t >= lo && t <= hi; }
  constexpr bool contains(const Interval& o) const { return o.lo >= lo && o.hi <= hi; }
  /// i-th of n equally spaced samples, endpoints included.
  constexpr double sample(int i, int n) const {
    return n < 2 ? lo : (i == n - 1 ? hi : lo + width() * (static_cast<double>(i) / (n - 1)));
  }
};

/// A function of one variable, evaluable in jet arithmetic.
///
/// The argument is whatever jet the caller supplies (seed_u for profiles of
/// u, seed_v for profiles of v); derivative slots of the unused variable stay
/// zero.
struct Profile1D {
  std::function<Jet2(const Jet2&)> fn;
  std::string label;

  Jet2 operator()(const Jet2& t) const { return fn(t); }
  /// Value, first and second derivative at t.
  Jet2 at(double t) const { return fn(Jet2::seed_u(t)); }
};

/// Meridian profile m: u ↦ (f(u), g(u)) on I.
struct ProfilePair {
  Profile1D f;
  Profile1D g;
  Interval domain;
};

/// Generating function φ of a meridian surface of parabolic type (w¹ = φ(v), w² = v).
struct ProfileCurvePhi {
  Profile1D phi;
  Interval domain;
};

/// Everything that determines a meridian surface of parabolic type.
struct ParabolicFamily {
  ProfilePair profile;
  ProfileCurvePhi phi;
};

/// Common profiles.
namespace profiles {

Profile1D constant(double c);
/// s·t + c
Profile1D linear(double slope, double intercept);
Profile1D identity();
Profile1D from(std::function<Jet2(const Jet2&)> fn, std::string label);

}  // namespace profiles

}  // namespace meridian
