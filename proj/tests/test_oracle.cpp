#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "kahler/acceptance.hpp"
#include "kahler/errors.hpp"
#include "kahler/expr.hpp"
#include "kahler/oracle.hpp"
#include "kahler/oracle_kernels.hpp"
#include "support.hpp"

using namespace kahler;
using testing_support::random_even;
using testing_support::uniform;

namespace {

constexpr double kPi = std::numbers::pi;

MeromorphicFunction contour(const std::string& text) { return to_meromorphic(parse(text)); }

MeromorphicFunction line(const std::string& text) { return to_meromorphic(parse(text, {ParseMode::real_line, {}})); }

double line_integral(const std::string& text, double tol, Execution ex = Execution::parallel) {
  const auto h = line(text);
  const TailModel tail = tail_model(h);
  QuadratureSpec spec;
  spec.tol = tol;
  spec.tail_cutoff = suggest_tail_cutoff(tail, tol / 4);
  return quad_real_line([h](double x) { return h({x, 0.0}).u; }, tail, spec, ex).value;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("quadrature spec validation") {
  QuadratureSpec s;
  CHECK_NOTHROW(s.validate());
  s.n_points = 15;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.n_points = 8;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = {};
  s.tail_cutoff = 0.0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = {};
  s.tol = -1.0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("circle quadrature examples") {
  const PlaneFunction k = [](double x, double y) { return -y / (x * x + y * y); };
  const PlaneFunction g = [](double x, double y) { return x / (x * x + y * y); };
  CHECK(quad_circle(k, g, {{0, 0}, 1.0}).value == doctest::Approx(2 * kPi).epsilon(1e-14));

  CircleContour cw{{0, 0}, 1.0};
  cw.orientation = Orientation::clockwise;
  CHECK(quad_circle(k, g, cw).value == doctest::Approx(-2 * kPi).epsilon(1e-14));

  const PlaneFunction one = [](double, double) { return 1.0; };
  const PlaneFunction zero = [](double, double) { return 0.0; };
  CHECK(std::abs(quad_circle(one, zero, {{0.3, -2}, 1.7}).value) <= 1e-14);

  const OneForm f = real_form(contour("1/(z^2+1)^2"));
  CHECK(std::abs(quad_circle(f.k, f.g, {{0, 1}, 0.5}).value - kPi / 2) <= 1e-10);
}

TEST_CASE("circle quadrature reports poles on the contour") {
  const OneForm f = real_form(contour("1/(z-1)"));
  CHECK_THROWS_AS(quad_circle(f.k, f.g, {{0, 0}, 1.0}), ComputationError);
}

TEST_CASE("real line quadrature examples") {
  CHECK(std::abs(line_integral("1/(x^2+1)", 1e-9) - kPi) <= 1e-8);
  CHECK(std::abs(line_integral("exp(I*x)/(x^2+1)", 1e-9) - kPi / std::exp(1.0)) <= 1e-8);
  CHECK(std::abs(line_integral("x/(x^4+1)", 1e-11)) <= 1e-10);
}

TEST_CASE("tail bounds") {
  const TailModel rational{2, 1.0, 0.0};
  CHECK(tail_bound(rational, 100.0) == doctest::Approx(0.04));
  CHECK(tail_bound(rational, 200.0) < tail_bound(rational, 100.0));
  CHECK(std::isinf(tail_bound({1, 1.0, 0.0}, 1e6)));
  CHECK(std::isfinite(tail_bound({1, 1.0, 2.0}, 1e6)));
  const double cut = suggest_tail_cutoff(rational, 1e-6);
  CHECK(tail_bound(rational, cut) <= 1e-6);
  CHECK(tail_bound(rational, cut / 2) > 1e-6);

  QuadratureSpec spec;
  spec.tail_cutoff = 10.0;
  CHECK_THROWS_AS(quad_real_line([](double x) { return 1 / (x * x + 1); }, rational, spec), QuadratureFailure);
}

TEST_CASE("differential check examples") {
  const auto a = differential_check(contour("1/z"), {{0, 0}, 1.0}, 1e-10);
  CHECK(a.passed);
  CHECK(std::abs(a.symbolic) <= 1e-14);
  CHECK(a.symbolic_defect == doctest::Approx(2 * kPi).epsilon(1e-14));
  CHECK(a.numeric_defect == doctest::Approx(2 * kPi).epsilon(1e-12));

  CHECK(differential_check(contour("1/(z^2+1)^2"), {{0, 1}, 0.5}, 1e-8).passed);

  const auto bad = differential_check(contour("1/(z-1)"), {{0, 0}, 1.0}, 1e-8);
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.detail.empty());
}

TEST_CASE("differential check on random rationals and circles") {
  std::mt19937_64 rng(61);
  int checked = 0;
  while (checked < 50) {
    const auto r = acceptance::random_rational(rng, 3, 2, 6, 0.5);
    const CircleContour c{random_even(rng, -1, 1), uniform(rng, 0.3, 2.5)};
    bool clear = true;
    for (const Pole& p : find_poles(r.f)) clear = clear && std::abs(abs(p.location - c.center) - c.radius) > 0.1;
    if (!clear) continue;
    const auto report = differential_check(r.f, c, 1e-7);
    CHECK_MESSAGE(report.passed, report.detail);
    ++checked;
  }
}

TEST_CASE("oracle agrees with itself across radii") {
  std::mt19937_64 rng(62);
  for (int i = 0; i < 30; ++i) {
    const auto r = acceptance::random_rational(rng, 3, 3, 6, 1.0);
    const Pole p = find_poles(r.f).front();
    double nearest = 2.0;
    for (const Pole& q : find_poles(r.f))
      if (abs(q.location - p.location) > 0) nearest = std::min(nearest, abs(q.location - p.location));
    const OneForm f = real_form(r.f);
    const double a = quad_circle(f.k, f.g, {p.location, 0.3 * nearest}).value;
    const double b = quad_circle(f.k, f.g, {p.location, 0.6 * nearest}).value;
    CHECK(std::abs(a - b) <= 1e-8 * (1 + std::abs(a)));
  }
}

TEST_CASE("doubling the node count never moves away from the converged value") {
  std::mt19937_64 rng(63);
  for (int i = 0; i < 20; ++i) {
    const auto r = acceptance::random_rational(rng, 3, 2, 6, 1.0);
    double nearest = 1e9;
    const EvenElement center = random_even(rng, -1, 1);
    for (const Pole& p : find_poles(r.f)) nearest = std::min(nearest, abs(p.location - center));
    const CircleContour c{center, 0.5 * nearest};
    const OneForm f = real_form(r.f);
    const double reference = trapezoid_circle(f.k, f.g, c, 1 << 14);
    const double floor = 1e-13 * (1 + std::abs(reference));
    double previous = std::abs(trapezoid_circle(f.k, f.g, c, 16) - reference);
    for (std::size_t n = 32; n <= 4096; n *= 2) {
      const double err = std::abs(trapezoid_circle(f.k, f.g, c, n) - reference);
      CHECK(err <= std::max(previous, floor));
      previous = err;
    }
  }
}

TEST_CASE("exact differentials integrate to zero") {
  // d(x^3 y - 2 x y^2 + y^4 + 3 x)
  const PlaneFunction k = [](double x, double y) { return 3 * x * x * y - 2 * y * y + 3; };
  const PlaneFunction g = [](double x, double y) { return x * x * x - 4 * x * y + 4 * y * y * y; };
  std::mt19937_64 rng(64);
  for (int i = 0; i < 50; ++i) {
    const CircleContour c{random_even(rng, -0.5, 0.5), uniform(rng, 0.1, 1.0)};
    CHECK(std::abs(quad_circle(k, g, c).value) <= 1e-12);
  }
}

TEST_CASE("serial and parallel kernels are bit-identical") {
  std::mt19937_64 rng(65);
  for (int i = 0; i < 10; ++i) {
    const auto r = acceptance::random_rational(rng);
    const OneForm f = real_form(r.f);
    const EvenElement center{0.0, 0.0};
    const double radius = 5.0;
    for (std::size_t n : {16u, 1000u, 4096u, 100000u}) {
      const auto s = kernels::circle_nodes_serial(f.k, f.g, center, radius, n, 0, 1, n);
      const auto p = kernels::circle_nodes_parallel(f.k, f.g, center, radius, n, 0, 1, n);
      CHECK(s.sum == p.sum);
      CHECK(s.abs_sum == p.abs_sum);
      const auto so = kernels::circle_nodes_serial(f.k, f.g, center, radius, 2 * n, 1, 2, n);
      const auto po = kernels::circle_nodes_parallel(f.k, f.g, center, radius, 2 * n, 1, 2, n);
      CHECK(so.sum == po.sum);
    }
    const CircleContour c{center, radius};
    CHECK(quad_circle(f.k, f.g, c, {}, Execution::serial).value ==
          quad_circle(f.k, f.g, c, {}, Execution::parallel).value);
  }

  const kernels::LineFunction h = [](double x) { return std::cos(3 * x) / (x * x + 1); };
  std::vector<kernels::Panel> panels;
  for (int i = -500; i < 500; ++i) panels.push_back({double(i), double(i + 1), 1e-12});
  CHECK(kernels::simpson_panels_serial(h, panels) == kernels::simpson_panels_parallel(h, panels));
  CHECK(line_integral("1/(x^2+1)^2", 1e-9, Execution::serial) ==
        line_integral("1/(x^2+1)^2", 1e-9, Execution::parallel));
}

TEST_CASE("errors inside parallel kernels reach the caller") {
  const kernels::LineFunction bad = [](double x) -> double {
    if (x > 10) throw std::runtime_error("boom");
    return x;
  };
  std::vector<kernels::Panel> panels;
  for (int i = 0; i < 64; ++i) panels.push_back({double(i), double(i + 1), 1e-10});
  CHECK_THROWS_AS(kernels::simpson_panels_parallel(bad, panels), std::runtime_error);
  const PlaneFunction k = [](double x, double) -> double {
    if (x > 0.99) throw std::runtime_error("boom");
    return 0.0;
  };
  CHECK_THROWS_AS(kernels::circle_nodes_parallel(k, k, {0, 0}, 1.0, 4096, 0, 1, 4096), std::runtime_error);
}

TEST_CASE("adaptive Simpson") {
  CHECK(kernels::adaptive_simpson([](double x) { return std::exp(x); }, 0, 1, 1e-13) ==
        doctest::Approx(std::exp(1.0) - 1).epsilon(1e-12));
  CHECK(kernels::adaptive_simpson([](double x) { return x * x * x; }, -1, 2, 1e-12) == doctest::Approx(3.75));
}

}  // TEST_SUITE
