#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "kahler/acceptance.hpp"
#include "kahler/contour.hpp"
#include "kahler/errors.hpp"
#include "kahler/expr.hpp"
#include "kahler/oracle.hpp"
#include "support.hpp"

using namespace kahler;
using testing_support::random_even;
using testing_support::uniform;

namespace {

constexpr double kPi = std::numbers::pi;

MeromorphicFunction contour(const std::string& text) { return to_meromorphic(parse(text)); }

MeromorphicFunction line(const std::string& text, std::map<std::string, double> bindings = {}) {
  return to_meromorphic(parse(text, {ParseMode::real_line, std::move(bindings)}));
}

Pole simple(EvenElement at) { return {at, 1, 1}; }

}  // namespace

TEST_SUITE("contour") {

TEST_CASE("closed contour examples") {
  const auto a = integrate_closed(contour("1/(z^2+1)^2"), {{0, 1}, 0.5});
  CHECK(a.real_value == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK(std::abs(a.imaginary_defect) <= 1e-14);
  CHECK(a.warnings.empty());
  CHECK(a.enclosed.size() == 1);

  const auto b = integrate_closed(contour("1/(z*(z-pi))"), {{0, 0}, 1.0});
  CHECK(b.real_value == 0.0);
  CHECK(b.imaginary_defect == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(b.warnings.size() == 1);

  const auto c = integrate_closed(contour("1/z^2"), {{0, 0}, 1.0});
  CHECK(c.real_value == 0.0);
  CHECK(c.imaginary_defect == 0.0);

  const auto empty = integrate_closed(contour("1/(z-5)"), {{0, 0}, 1.0});
  CHECK(empty.enclosed.empty());
  CHECK(empty.real_value == 0.0);
}

TEST_CASE("enclosed poles") {
  const std::vector<Pole> pair{simple({0, 1}), simple({0, -1})};
  const auto in = enclosed_poles({{0, 1}, 0.5}, pair);
  REQUIRE(in.size() == 1);
  CHECK(in[0].location == EvenElement{0, 1});

  const auto in2 = enclosed_poles({{0, 0}, 1.0}, {simple({0, 0}), simple({kPi, 0})});
  REQUIRE(in2.size() == 1);
  CHECK(in2[0].location == EvenElement{0, 0});

  CHECK_THROWS_AS(enclosed_poles({{0, 0}, 1.0}, {simple({1, 0})}), PoleOnContour);
  CHECK_THROWS_AS(enclosed_poles({{0, 0}, 1.0}, {simple({1 + 1e-7, 0})}), PoleOnContour);
  CHECK(enclosed_poles({{0, 0}, 1.0}, {simple({1 + 1e-5, 0})}).empty());
  CHECK_THROWS_AS(enclosed_poles({{0, 0}, 0.0}, pair), std::invalid_argument);
  CHECK_THROWS_AS(enclosed_poles({{0, 0}, -1.0}, pair), std::invalid_argument);
}

TEST_CASE("real line examples") {
  CHECK(integrate_real_line(line("1/(x^2+1)")).real_value == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(integrate_real_line(line("1/(x^2+1)^2")).real_value == doctest::Approx(kPi / 2).epsilon(1e-14));
  for (double t : {0.5, 1.0, 2.0}) {
    const auto r = integrate_real_line(line("exp(I*t*x)/(x^2+1)", {{"t", t}}));
    CHECK(r.real_value == doctest::Approx(kPi * std::exp(-t)).epsilon(1e-13));
    const auto l = integrate_real_line(line("exp(-I*t*x)/(x^2+1)", {{"t", t}}));
    CHECK(l.real_value == doctest::Approx(kPi * std::exp(-t)).epsilon(1e-13));
  }
  // Closing below gives the same value for a decaying rational.
  CHECK(integrate_real_line(line("1/(x^2+1)"), HalfPlane::lower).real_value == doctest::Approx(kPi).epsilon(1e-14));
}

TEST_CASE("real line rejections") {
  CHECK_THROWS_AS(integrate_real_line(line("x/(x^2+1)")), DecayViolation);
  CHECK_THROWS_AS(integrate_real_line(line("sin(x)/(x^2+1)")), DecayViolation);
  CHECK_THROWS_AS(integrate_real_line(line("cos(x)/(x^2+1)")), DecayViolation);
  CHECK_THROWS_AS(integrate_real_line(line("exp(I*x)/(x^2+1)"), HalfPlane::lower), DecayViolation);
  CHECK_THROWS_AS(integrate_real_line(line("exp(x)/(x^2+1)")), DecayViolation);
  CHECK_THROWS_AS(integrate_real_line(line("exp(I*x)*x^2/(x^2+1)")), DecayViolation);
  CHECK_THROWS_AS(integrate_real_line(line("1/(x-1)^2")), ComputationError);
}

TEST_CASE("angular coefficient of w dx is minus the 2-form part of w z") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 500; ++i) {
    const double rho = uniform(rng, 0.1, 10.0);
    const double phi = uniform(rng, -kPi, kPi);
    const EvenElement z = from_polar({rho, phi});
    const auto r = acceptance::random_rational(rng);
    const EvenElement w = r.f(z);
    const Multivector alpha = Multivector::one_form(w.u, -w.v);
    const double j = angular_coefficient(alpha, z);
    const double expected = -(w * z).v;
    CHECK(std::abs(j - expected) <= 1e-12 * abs(w) * rho);
  }
}

TEST_CASE("orientation flips the sign exactly") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 100; ++i) {
    const auto r = acceptance::random_rational(rng);
    const CircleContour ccw{random_even(rng, -1, 1), uniform(rng, 0.5, 3.0)};
    CircleContour cw = ccw;
    cw.orientation = Orientation::clockwise;
    IntegralResult a, b;
    try {
      a = integrate_closed(r.f, ccw);
      b = integrate_closed(r.f, cw);
    } catch (const PoleOnContour&) {
      continue;
    }
    CHECK(b.real_value == -a.real_value);
    CHECK(b.imaginary_defect == -a.imaginary_defect);
  }
}

TEST_CASE("value does not depend on the radius") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 50; ++i) {
    const auto r = acceptance::random_rational(rng);
    const auto poles = find_poles(r.f);
    const Pole& p = poles.front();
    double nearest = 2.0;
    for (const Pole& q : poles)
      if (&q != &p) nearest = std::min(nearest, abs(q.location - p.location));
    const CircleContour small{p.location, 0.2 * nearest};
    const CircleContour large{p.location, 0.7 * nearest};
    const double a = integrate_closed(r.f, small).real_value;
    const double b = integrate_closed(r.f, large).real_value;
    CHECK(std::abs(a - b) <= 1e-10 * (1 + std::abs(a)));
    CHECK(std::abs(a - acceptance::factored_circle_integral(r, small)) <= 1e-8 * (1 + std::abs(a)));
    CHECK(std::abs(b - acceptance::factored_circle_integral(r, large)) <= 1e-8 * (1 + std::abs(b)));
  }
}

TEST_CASE("values add over disjoint pole sets") {
  std::mt19937_64 rng(54);
  int checked = 0;
  while (checked < 50) {
    const auto r = acceptance::random_rational(rng, 2, 3, 6, 1.0);
    const auto poles = find_poles(r.f);
    if (poles.size() != 2) continue;
    const EvenElement a = poles[0].location, b = poles[1].location;
    const double d = abs(a - b);
    const double both = integrate_closed(r.f, {(a + b) / 2.0, d / 2 + 0.3}).real_value;
    const double first = integrate_closed(r.f, {a, 0.3 * d}).real_value;
    const double second = integrate_closed(r.f, {b, 0.3 * d}).real_value;
    CHECK(std::abs(both - (first + second)) <= 1e-10 * (1 + std::abs(both)));
    ++checked;
  }
}

TEST_CASE("residue sum bookkeeping") {
  const auto f = contour("1/(z^2+1)");
  const auto poles = find_poles(f);
  const auto ccw = sum_residues(f, poles, 1.0);
  CHECK(ccw.residues.size() == 2);
  CHECK(ccw.real_value == 0.0);
  const auto upper = sum_residues(f, {poles[0]}, 1.0);
  CHECK(upper.real_value == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(sum_residues(f, {poles[0]}, -1.0).real_value == -upper.real_value);
}

}  // TEST_SUITE
