#include <doctest.h>

#include <cmath>

#include "meridian/expression.hpp"

using namespace meridian;

TEST_CASE("parse and evaluate") {
  const Jet2 u = Jet2::seed_u(0.7), v = Jet2::seed_v(1.3);
  CHECK(Expression::parse("2+3*4").eval(u, v).val == 14.0);
  CHECK(Expression::parse("2^3^2").eval(u, v).val == doctest::Approx(512.0));
  CHECK(Expression::parse("-u^2").eval(u, v).val == doctest::Approx(-0.49));
  CHECK(Expression::parse("(1+u)*(1-u)").eval(u, v).val == doctest::Approx(1 - 0.49));
  CHECK(Expression::parse("1.5e-1*v").eval(u, v).val == doctest::Approx(0.195));
  const Jet2 s = Expression::parse("sin(u)*cos(v) + sqrt(u) + ln(v) + exp(u*v)").eval(u, v);
  CHECK(s.val == doctest::Approx(std::sin(0.7) * std::cos(1.3) + std::sqrt(0.7) + std::log(1.3) + std::exp(0.91)));
  CHECK(s.du == doctest::Approx(std::cos(0.7) * std::cos(1.3) + 0.5 / std::sqrt(0.7) + 1.3 * std::exp(0.91)));
  CHECK(s.dv == doctest::Approx(-std::sin(0.7) * std::sin(1.3) + 1 / 1.3 + 0.7 * std::exp(0.91)));
}

TEST_CASE("derivatives match hand computation") {
  const Jet2 r = Expression::parse("u^3 - u*v/2").eval(Jet2::seed_u(2.0), Jet2::seed_v(3.0));
  CHECK(r.val == doctest::Approx(5.0));
  CHECK(r.du == doctest::Approx(12.0 - 1.5));
  CHECK(r.dv == doctest::Approx(-1.0));
  CHECK(r.duu == doctest::Approx(12.0));
  CHECK(r.duv == doctest::Approx(-0.5));
  CHECK(r.dvv == doctest::Approx(0.0));
}

TEST_CASE("variable tracking and profiles") {
  const Expression e = Expression::parse("2 + sin(v)");
  CHECK_FALSE(e.uses_u());
  CHECK(e.uses_v());
  CHECK(e.text() == "2 + sin(v)");
  const Profile1D p = e.as_profile('v');
  CHECK(p.at(0.5).val == doctest::Approx(2 + std::sin(0.5)));
  CHECK_THROWS_AS(e.as_profile('u'), UsageError);
}

TEST_CASE("malformed input reports the offending position") {
  const auto position_of = [](const char* text) -> long {
    try {
      Expression::parse(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("1 +") == 3);
  CHECK(position_of("2*(u") == 4);
  CHECK(position_of("foo(u)") == 0);
  CHECK(position_of("u $ v") == 2);
  CHECK(position_of("") == 0);
  CHECK(position_of("u)") == 1);
  CHECK(position_of("w") == 0);
  try {
    Expression::parse("1 +");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
    CHECK(e.reason().find("position") == std::string::npos);
  }
}

TEST_CASE("domain errors propagate at evaluation") {
  const Expression e = Expression::parse("ln(u)");
  CHECK_THROWS_AS(e.eval(Jet2::seed_u(-1.0), Jet2::seed_v(0.0)), DomainError);
}
