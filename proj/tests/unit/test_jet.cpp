#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "meridian/errors.hpp"
#include "meridian/jet.hpp"

using namespace meridian;

namespace {

// Five-point stencils in one variable.
double d1(const std::function<double(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}
double d2(const std::function<double(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

Jet2 random_jet(std::mt19937_64& rng, double lo = -2.0, double hi = 2.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  return {d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)};
}

bool close(const Jet2& a, const Jet2& b, double tol) {
  const double xs[] = {a.val - b.val, a.du - b.du, a.dv - b.dv, a.duu - b.duu, a.duv - b.duv, a.dvv - b.dvv};
  const double scale = 1.0 + std::fabs(b.val) + std::fabs(b.du) + std::fabs(b.dv) + std::fabs(b.duu) +
                       std::fabs(b.duv) + std::fabs(b.dvv);
  for (const double x : xs)
    if (std::fabs(x) > tol * scale) return false;
  return true;
}

}  // namespace

TEST_CASE("sin at its maximum") {
  const Jet2 s = jet_apply(ElementaryFn::Sin, Jet2::seed_u(std::numbers::pi / 2));
  CHECK(s.val == doctest::Approx(1.0));
  CHECK(std::fabs(s.du) < 1e-15);
  CHECK(s.duu == doctest::Approx(-1.0));
  CHECK(s.dv == 0.0);
  CHECK(s.duv == 0.0);
  CHECK(s.dvv == 0.0);
}

TEST_CASE("constants propagate") {
  const Jet2 r = jet_apply(ElementaryFn::Sqrt, Jet2::constant(4.0));
  CHECK(r == Jet2::constant(2.0));
}

TEST_CASE("log at one") {
  const Jet2 l = jet_apply(ElementaryFn::Ln, Jet2::seed_u(1.0));
  CHECK(l.val == 0.0);
  CHECK(l.du == 1.0);
  CHECK(l.duu == -1.0);
  const auto ln = [](double x) { return std::log(x); };
  CHECK(std::fabs(d1(ln, 1.0, 1e-5) - l.du) <= 1e-8);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(sqrt(Jet2::constant(-1.0)), DomainError);
  CHECK_THROWS_AS(log(Jet2::constant(0.0)), DomainError);
  CHECK_THROWS_AS(reciprocal(Jet2::constant(0.0)), DomainError);
  CHECK_THROWS_AS(pow(Jet2::constant(-2.0), 0.5), DomainError);
}

TEST_CASE("elementary functions agree with finite differences") {
  struct Case {
    ElementaryFn fn;
    double exponent;
    std::function<double(double)> ref;
    double lo, hi;
  };
  const Case cases[] = {
      {ElementaryFn::Sin, 1.0, [](double x) { return std::sin(x); }, -3.0, 3.0},
      {ElementaryFn::Cos, 1.0, [](double x) { return std::cos(x); }, -3.0, 3.0},
      {ElementaryFn::Sqrt, 1.0, [](double x) { return std::sqrt(x); }, 0.5, 4.0},
      {ElementaryFn::Ln, 1.0, [](double x) { return std::log(x); }, 0.5, 4.0},
      {ElementaryFn::Exp, 1.0, [](double x) { return std::exp(x); }, -2.0, 2.0},
      {ElementaryFn::Pow, 2.5, [](double x) { return std::pow(x, 2.5); }, 0.5, 3.0},
      {ElementaryFn::Reciprocal, 1.0, [](double x) { return 1.0 / x; }, 0.5, 3.0},
  };
  std::mt19937_64 rng(3);
  for (const Case& c : cases) {
    for (int n = 0; n < 20; ++n) {
      const double x = std::uniform_real_distribution<double>(c.lo, c.hi)(rng);
      const Jet2 j = jet_apply(c.fn, Jet2::seed_u(x), c.exponent);
      CHECK(j.val == doctest::Approx(c.ref(x)).epsilon(1e-14));
      const double fd1 = d1(c.ref, x, 1e-5);
      CHECK(std::fabs(j.du - fd1) <= 1e-6 * std::fmax(std::fabs(fd1), 1.0));
      // Second derivatives need a larger step to stay out of roundoff.
      const double fd2 = d2(c.ref, x, 1e-3);
      CHECK(std::fabs(j.duu - fd2) <= 1e-6 * std::fmax(std::fabs(fd2), 1.0));
    }
  }
}

TEST_CASE("product, quotient and chain rules hold on random jets") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 200; ++n) {
    const Jet2 a = random_jet(rng), b = random_jet(rng), c = random_jet(rng);
    CHECK(close(a * b, b * a, 1e-15));
    CHECK(close((a * b) * c, a * (b * c), 1e-14));
    CHECK(close(a * (b + c), a * b + a * c, 1e-14));
    Jet2 d = random_jet(rng, 0.5, 2.0);
    CHECK(close((a / d) * d, a, 1e-13));
    // exp(log x) = x and sin² + cos² = 1 exercise the chain rule.
    CHECK(close(exp(log(d)), d, 1e-13));
    CHECK(close(sin(a) * sin(a) + cos(a) * cos(a), Jet2::constant(1.0), 1e-14));
    CHECK(close(sqrt(d) * sqrt(d), d, 1e-13));
  }
}

TEST_CASE("mixed partial is symmetric under swapping seeds") {
  const auto expr = [](const Jet2& x, const Jet2& y) {
    return sin(x * y) * exp(x) + sqrt(1.0 + x * x + y * y) / (2.0 + cos(y)) + pow(x * x + 1.0, 1.5) * log(2.0 + y * y);
  };
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int n = 0; n < 50; ++n) {
    const double p = d(rng), q = d(rng);
    const Jet2 a = expr(Jet2::seed_u(p), Jet2::seed_v(q));
    const Jet2 b = expr(Jet2::seed_v(p), Jet2::seed_u(q));
    CHECK(a.duv == b.duv);
    CHECK(a.duu == b.dvv);
    CHECK(a.du == b.dv);
  }
}

TEST_CASE("bivariate jets match finite differences") {
  const auto f = [](double x, double y) { return std::sin(x * y) + x * x * std::exp(y); };
  const double x = 0.4, y = -0.3, h = 1e-3;
  const Jet2 j = sin(Jet2::seed_u(x) * Jet2::seed_v(y)) + Jet2::seed_u(x) * Jet2::seed_u(x) * exp(Jet2::seed_v(y));
  const double fuv = (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)) / (4 * h * h);
  CHECK(std::fabs(j.duv - fuv) < 1e-6);
}
