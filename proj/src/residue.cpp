#include "kahler/residue.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "kahler/errors.hpp"

namespace kahler {

std::string to_string(ResidueMethod m) {
  switch (m) {
    case ResidueMethod::series: return "series";
    case ResidueMethod::order_reduction: return "order_reduction";
    case ResidueMethod::derivative_formula: return "derivative_formula";
  }
  return "?";
}

namespace {

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int window_for(const Pole& p, int window) { return std::max(window, p.order + 2); }

}  // namespace

EvenElement residue(const MeromorphicFunction& f, const Pole& p, int window) {
  return local_expansion(f, p.location, window_for(p, window)).coefficient(-1);
}

ResidueReport residue_report(const MeromorphicFunction& f, const Pole& p, int window) {
  const auto s = local_expansion(f, p.location, window_for(p, window));
  return {p, s.coefficient(-1), s.leading(), ResidueMethod::series, {}, {}};
}

ResidueReport residue_by_order_reduction(const MeromorphicFunction& f, const Pole& p, int window) {
  ResidueReport report{p, {}, {}, ResidueMethod::order_reduction, {}, {}};
  LaurentSeries remainder = local_expansion(f, p.location, window_for(p, window));
  const int initial_order = -remainder.valuation();
  for (int step = 0; remainder.valuation() < 0; ++step) {
    if (step >= initial_order) {
      throw ComputationError("order reduction did not exhaust the pole at " + to_string(p.location));
    }
    const int m = -remainder.valuation();
    const auto z_m = LaurentSeries::monomial(p.location, {1.0, 0.0}, m, remainder.truncation_order() + 2 * m);
    const EvenElement a_m = series_mul(remainder, z_m).coefficient(0);
    report.extractions.push_back({-m, a_m});
    remainder = series_sub(remainder, LaurentSeries::monomial(p.location, a_m, -m, remainder.truncation_order()));
    report.remainders.push_back(remainder);
  }
  if (!report.extractions.empty()) report.leading = report.extractions.front().coefficient;
  for (const auto& e : report.extractions) {
    if (e.power == -1) report.a_minus_1 = e.coefficient;
  }
  return report;
}

EvenElement regularized_x_derivative(const MeromorphicFunction& f, const Pole& p, int k, double step) {
  const EvenElement z0 = p.location;
  const auto roots = find_roots(f.den());
  std::size_t self = 0;
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (abs(roots[i].location - z0) < abs(roots[self].location - z0)) self = i;
  }
  const int den_mult = roots.empty() ? 0 : roots[self].multiplicity;
  const int absorbed = den_mult - p.order;  // zeros of the entire factor at z0

  double nearest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i != self) nearest = std::min(nearest, abs(roots[i].location - z0));
  }
  if (!std::isfinite(nearest)) nearest = 1.0 + abs(z0);

  EvenElement factor_limit{1.0, 0.0};
  if (absorbed > 0 && f.factor()) {
    factor_limit = entire_series(f.factor()->kind, f.factor()->scale, z0, absorbed).coefficient(absorbed);
  }

  auto g = [&](EvenElement z) {
    EvenElement value = f.num()(z);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (i != self) value = value / even_int_pow(z - roots[i].location, roots[i].multiplicity);
    }
    if (absorbed > 0) {
      const EvenElement dz = z - z0;
      return value * (dz.is_zero() ? factor_limit : f.factor_value(z) / even_int_pow(dz, absorbed));
    }
    return value * f.factor_value(z);
  };

  if (k == 0) return g(z0);

  auto central = [&](double h) {
    EvenElement acc{};
    for (int j = 0; j <= k; ++j) {
      const double offset = (0.5 * k - j) * h;
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      acc += (sign * binomial(k, j)) * g(z0 + EvenElement{offset, 0.0});
    }
    return acc / std::pow(h, k);
  };

  // Ridders' extrapolation over a halving step sequence.
  constexpr int kLevels = 10;
  double h = step > 0.0 ? step : 0.4 * nearest / std::max(k, 1);
  std::vector<std::vector<EvenElement>> table(kLevels, std::vector<EvenElement>(kLevels));
  table[0][0] = central(h);
  EvenElement best = table[0][0];
  double best_err = std::numeric_limits<double>::infinity();
  for (int i = 1; i < kLevels; ++i) {
    h *= 0.5;
    table[0][i] = central(h);
    double fac = 4.0;
    for (int j = 1; j <= i; ++j) {
      table[j][i] = (table[j - 1][i] * fac - table[j - 1][i - 1]) / (fac - 1.0);
      fac *= 4.0;
      const double err = std::max(abs(table[j][i] - table[j - 1][i]), abs(table[j][i] - table[j - 1][i - 1]));
      if (err <= best_err) {
        best_err = err;
        best = table[j][i];
      }
    }
    if (abs(table[i][i] - table[i - 1][i - 1]) >= 2.0 * best_err) break;
  }
  return best;
}

ResidueReport residue_by_derivative_formula(const MeromorphicFunction& f, const Pole& p) {
  const int m = p.order;
  const EvenElement a_minus_1 = regularized_x_derivative(f, p, m - 1) / factorial(m - 1);
  const EvenElement leading = regularized_x_derivative(f, p, 0);
  return {p, a_minus_1, leading, ResidueMethod::derivative_formula, {}, {}};
}

bool is_two_form(EvenElement e, double tol) {
  return std::abs(e.u) <= tol * (std::abs(e.u) + std::abs(e.v) + 1e-300);
}

namespace {

void require_regular(const LaurentSeries& s, EvenElement z0) {
  if (s.valuation() < 0) {
    throw ComputationError(to_string(z0) + " is a pole of order " + std::to_string(-s.valuation()) +
                           "; Cauchy's formula needs a regular point");
  }
}

}  // namespace

CauchyValue cauchy_evaluate(const MeromorphicFunction& f, EvenElement z0) {
  require_regular(local_expansion(f, z0, 1), z0);
  const EvenElement value = f(z0);
  const bool applicable = is_two_form(value);
  return {value, applicable, (2.0 * std::numbers::pi) * EvenElement::unit() * value};
}

CauchyDerivative cauchy_derivative(const MeromorphicFunction& f, EvenElement z0, int n) {
  if (n < 0) throw UsageError("derivative order must be non-negative");
  const auto s = local_expansion(f, z0, n + 1);
  require_regular(s, z0);
  const EvenElement d = factorial(n) * s.coefficient(n);
  return {d, is_two_form(d), (2.0 * std::numbers::pi / factorial(n)) * EvenElement::unit() * d};
}

LaurentSeries laurent_expand(const MeromorphicFunction& f, EvenElement z0, int from, int to, int max_window) {
  if (from > to) throw UsageError("laurent window is empty: from > to");
  if (to - from + 1 > max_window) {
    throw UsageError("laurent window of " + std::to_string(to - from + 1) + " coefficients exceeds the maximum " +
                     std::to_string(max_window));
  }
  const int valuation = local_expansion(f, z0, 1).valuation();
  if (valuation > to) return LaurentSeries::zero(z0, to);
  return local_expansion(f, z0, to - valuation + 1).truncated(to);
}

std::vector<EvenElement> regularized_taylor(const MeromorphicFunction& f, EvenElement z0, int count) {
  const auto s = local_expansion(f, z0, count);
  const int m = std::max(0, -s.valuation());
  const auto b = series_mul(s, LaurentSeries::monomial(z0, {1.0, 0.0}, m, s.truncation_order() + 2 * m));
  std::vector<EvenElement> out;
  for (int n = 0; n < count && n <= b.truncation_order(); ++n) out.push_back(b.coefficient(n));
  return out;
}

}  // namespace kahler
