#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "kahler/acceptance.hpp"
#include "kahler/errors.hpp"
#include "kahler/expr.hpp"
#include "kahler/meromorphic.hpp"
#include "kahler/series.hpp"
#include "support.hpp"

using namespace kahler;
using testing_support::random_even;
using testing_support::rel_err;
using testing_support::scaled_err;

namespace {

const EvenElement kOrigin{0.0, 0.0};

LaurentSeries series(std::vector<EvenElement> c, int valuation = 0, EvenElement center = kOrigin) {
  return LaurentSeries::from_coeffs(center, valuation, std::move(c));
}

LaurentSeries random_series(std::mt19937_64& rng, EvenElement center, int window) {
  std::vector<EvenElement> c(static_cast<std::size_t>(window));
  for (auto& x : c) x = random_even(rng, -1, 1);
  std::uniform_int_distribution<int> val(-3, 3);
  return LaurentSeries::from_coeffs(center, val(rng), std::move(c));
}

double max_coeff(const LaurentSeries& s) {
  double m = 0.0;
  for (auto c : s.coeffs()) m = std::max(m, abs(c));
  return m;
}

// Largest coefficientwise difference over the window both series know.
double max_diff(const LaurentSeries& a, const LaurentSeries& b) {
  const int lo = std::min(a.valuation(), b.valuation());
  const int hi = std::min(a.truncation_order(), b.truncation_order());
  double d = 0.0;
  for (int n = lo; n <= hi; ++n) d = std::max(d, abs(a.coefficient(n) - b.coefficient(n)));
  return d;
}

MeromorphicFunction contour(const std::string& text) { return to_meromorphic(parse(text)); }

}  // namespace

TEST_SUITE("series") {

TEST_CASE("shape of a series") {
  const LaurentSeries s = series({{0, 0}, {2, 0}, {3, 0}}, -2);
  CHECK(s.valuation() == -1);
  CHECK(s.truncation_order() == 0);
  CHECK(s.coeffs().size() == 2);
  CHECK(s.coefficient(-5) == EvenElement{});
  CHECK(s.coefficient(-1) == EvenElement{2, 0});
  CHECK_THROWS_AS(s.coefficient(1), std::out_of_range);

  const LaurentSeries z = LaurentSeries::zero(kOrigin, 4);
  CHECK(z.is_zero());
  CHECK(z.valuation() == 5);
  CHECK(z.truncation_order() == 4);
}

TEST_CASE("leading coefficients below the snap threshold are dropped") {
  const LaurentSeries s = series({{1e-15, 0}, {1, 0}, {2, 0}});
  CHECK(s.valuation() == 1);
  const LaurentSeries kept = LaurentSeries::from_coeffs(kOrigin, 0, {{1e-15, 0}, {1, 0}}, 1e-16);
  CHECK(kept.valuation() == 0);
}

TEST_CASE("multiplication examples") {
  const LaurentSeries z = LaurentSeries::monomial(kOrigin, {1, 0}, 1, 6);
  const LaurentSeries zinv = LaurentSeries::monomial(kOrigin, {1, 0}, -1, 6);
  const LaurentSeries one = series_mul(z, zinv);
  CHECK(one.valuation() == 0);
  CHECK(one.coefficient(0) == EvenElement{1, 0});
  CHECK(one.coefficient(1) == EvenElement{});

  const LaurentSeries p = series_mul(series({{1, 0}, {1, 0}, {0, 0}, {0, 0}}), series({{1, 0}, {-1, 0}, {0, 0}, {0, 0}}));
  CHECK(p.coefficient(0) == EvenElement{1, 0});
  CHECK(p.coefficient(1) == EvenElement{0, 0});
  CHECK(p.coefficient(2) == EvenElement{-1, 0});
  CHECK(p.coefficient(3) == EvenElement{0, 0});

  const LaurentSeries s = entire_series(EntireKind::sin, {1, 0}, kOrigin, 8);
  const LaurentSeries q = series_mul(s, LaurentSeries::monomial(kOrigin, {1, 0}, -3, 8));
  CHECK(q.valuation() == -2);
  CHECK(q.coefficient(-2) == EvenElement{1, 0});
  CHECK(q.coefficient(-1) == EvenElement{0, 0});
  CHECK(q.coefficient(0).u == doctest::Approx(-1.0 / 6).epsilon(1e-15));
  CHECK(q.coefficient(2).u == doctest::Approx(1.0 / 120).epsilon(1e-15));
}

TEST_CASE("mismatched centers are rejected") {
  CHECK_THROWS_AS(series_mul(series({{1, 0}}), series({{1, 0}}, 0, {1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(series_add(series({{1, 0}}), series({{1, 0}}, 0, {1, 0})), std::invalid_argument);
}

TEST_CASE("inverse examples") {
  const LaurentSeries g = series_inv(series({{1, 0}, {-1, 0}, {0, 0}, {0, 0}, {0, 0}}));
  CHECK(g.valuation() == 0);
  for (int n = 0; n <= g.truncation_order(); ++n) CHECK(g.coefficient(n) == EvenElement{1, 0});

  const LaurentSeries z2 = LaurentSeries::monomial(kOrigin, {1, 0}, 2, 6);
  const LaurentSeries inv = series_inv(z2);
  CHECK(inv.valuation() == -2);
  CHECK(inv.coefficient(-2) == EvenElement{1, 0});

  // z^2 + 1 about dxdy is 2 dxdy z' + z'^2.
  const EvenElement i{0, 1};
  const LaurentSeries local = series({{0, 0}, {0, 2}, {1, 0}, {0, 0}, {0, 0}, {0, 0}}, 0, i);
  const LaurentSeries r = series_inv(local);
  CHECK(r.valuation() == -1);
  CHECK(r.leading() == EvenElement{0, -0.5});
  const LaurentSeries back = series_mul(local, r);
  CHECK(back.coefficient(0) == EvenElement{1, 0});
  for (int n = 1; n <= back.truncation_order(); ++n) CHECK(abs(back.coefficient(n)) <= 1e-15);

  CHECK_THROWS_AS(series_inv(LaurentSeries::zero(kOrigin, 3)), DivisionByZero);
}

TEST_CASE("entire series") {
  const LaurentSeries e = entire_series(EntireKind::exp, {1, 0}, kOrigin, 3);
  CHECK(e.truncation_order() == 3);
  CHECK(e.coefficient(0) == EvenElement{1, 0});
  CHECK(e.coefficient(1) == EvenElement{1, 0});
  CHECK(e.coefficient(2).u == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(e.coefficient(3).u == doctest::Approx(1.0 / 6).epsilon(1e-15));

  for (double t : {0.5, 1.0, 2.0}) {
    const LaurentSeries f = entire_series(EntireKind::exp, {0, t}, {0, 1}, 4);
    CHECK(f.coefficient(0).u == doctest::Approx(std::exp(-t)).epsilon(1e-15));
    CHECK(std::abs(f.coefficient(0).v) <= 1e-16);
  }

  const LaurentSeries s = entire_series(EntireKind::sin, {1, 0}, kOrigin, 5);
  CHECK(s.valuation() == 1);
  CHECK(s.coefficient(1) == EvenElement{1, 0});
  CHECK(s.coefficient(2) == EvenElement{0, 0});
  CHECK(s.coefficient(3).u == doctest::Approx(-1.0 / 6).epsilon(1e-15));
  CHECK(s.coefficient(5).u == doctest::Approx(1.0 / 120).epsilon(1e-15));

  CHECK_THROWS_AS(entire_series(EntireKind::cos, {1, 0}, kOrigin, -1), std::invalid_argument);
  CHECK_THROWS_AS(entire_kind_from_string("tan"), std::invalid_argument);
}

TEST_CASE("entire series evaluate to the function near the center") {
  std::mt19937_64 rng(21);
  for (EntireKind k : {EntireKind::exp, EntireKind::sin, EntireKind::cos}) {
    for (int i = 0; i < 50; ++i) {
      const EvenElement scale = random_even(rng, -1.5, 1.5);
      const EvenElement center = random_even(rng, -1, 1);
      const EvenElement z = center + random_even(rng, -0.05, 0.05);
      const LaurentSeries s = entire_series(k, scale, center, 20);
      CHECK(scaled_err(s.evaluate(z), entire_value(k, scale, z)) <= 1e-13);
    }
  }
}

TEST_CASE("coefficient lookup on expansions") {
  const LaurentSeries s = local_expansion(contour("sin(z)/z^3"), kOrigin);
  CHECK(s.coefficient(-1) == EvenElement{0, 0});
  const LaurentSeries d = local_expansion(contour("1/(z^2+1)^2"), {0, 1});
  CHECK(rel_err(d.coefficient(-2), {-0.25, 0}) <= 1e-14);
  CHECK(rel_err(d.coefficient(-1), {0, -0.25}) <= 1e-14);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    const EvenElement center = random_even(rng);
    std::uniform_int_distribution<int> window(8, 16);
    const LaurentSeries a = random_series(rng, center, window(rng));
    const LaurentSeries b = random_series(rng, center, window(rng));
    const LaurentSeries c = random_series(rng, center, window(rng));
    const double scale = max_coeff(a) * max_coeff(b) * max_coeff(c) * 16 * 16;

    const LaurentSeries ab_c = series_mul(series_mul(a, b), c);
    const LaurentSeries a_bc = series_mul(a, series_mul(b, c));
    CHECK(max_diff(ab_c, a_bc) <= 1e-12 * scale);

    // Distributivity, with both sides on the same valuation.
    const LaurentSeries bc_shift = c.shifted(b.valuation() - c.valuation());
    const LaurentSeries left = series_mul(a, series_add(b, bc_shift));
    const LaurentSeries right = series_add(series_mul(a, b), series_mul(a, bc_shift));
    CHECK(max_diff(left, right) <= 1e-12 * max_coeff(a) * (max_coeff(b) + max_coeff(c)) * 16);

    CHECK(max_diff(series_mul(a, b), series_mul(b, a)) <= 1e-15 * max_coeff(a) * max_coeff(b) * 16);
  }
}

TEST_CASE("product with the inverse is one across the window") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    std::vector<EvenElement> c(12);
    for (auto& x : c) x = random_even(rng, -1, 1);
    c[0] = c[0] + EvenElement{2.0, 0.0};  // keep the leading coefficient away from zero
    const LaurentSeries a = LaurentSeries::from_coeffs(random_even(rng), -2, c);
    const LaurentSeries one = series_mul(a, series_inv(a));
    CHECK(one.valuation() == 0);
    CHECK(one.truncation_order() == 11);
    CHECK(rel_err(one.coefficient(0), {1, 0}) <= 1e-12);
    for (int n = 1; n <= one.truncation_order(); ++n) CHECK(abs(one.coefficient(n)) <= 1e-12);
  }
}

TEST_CASE("coefficients match differences of the regularized function") {
  std::mt19937_64 rng(24);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    const auto r = acceptance::random_rational(rng, 3, 3, 6);
    for (std::size_t p = 0; p < r.roots.size(); ++p) {
      const EvenElement z0 = r.roots[p];
      const int m = r.orders[p];
      const LaurentSeries s = local_expansion(r.f, z0);
      if (s.valuation() != -m) continue;  // numerator zero nearby; the pole order drops
      // g = z'^m f from the factored construction, regular at z0.
      auto g = [&](EvenElement z) {
        EvenElement v = r.num(z);
        for (std::size_t q = 0; q < r.roots.size(); ++q)
          if (q != p) v = v / even_int_pow(z - r.roots[q], r.orders[q]);
        return v;
      };
      const double h = 1e-5;
      const EvenElement g0 = g(z0);
      const EvenElement g1 = (g(z0 + EvenElement{h, 0}) - g(z0 - EvenElement{h, 0})) / (2 * h);
      CHECK(scaled_err(s.coefficient(-m), g0, 1e-12) <= 1e-4);
      CHECK(scaled_err(s.coefficient(1 - m), g1, abs(g0)) <= 1e-4);
      ++checked;
    }
  }
  CHECK(checked > 50);
}

}  // TEST_SUITE
