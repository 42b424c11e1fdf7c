#include "kahler/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "kahler/errors.hpp"
#include "kahler/polynomial.hpp"

namespace kahler {

std::string to_string(EntireKind kind) {
  switch (kind) {
    case EntireKind::exp: return "exp";
    case EntireKind::sin: return "sin";
    case EntireKind::cos: return "cos";
  }
  return "?";
}

EntireKind entire_kind_from_string(const std::string& name) {
  if (name == "exp") return EntireKind::exp;
  if (name == "sin") return EntireKind::sin;
  if (name == "cos") return EntireKind::cos;
  throw std::invalid_argument("unknown entire function '" + name + "' (supported: exp, sin, cos)");
}

LaurentSeries LaurentSeries::zero(EvenElement center, int truncation_order) {
  return {center, truncation_order + 1, {}, truncation_order};
}

LaurentSeries LaurentSeries::monomial(EvenElement center, EvenElement c, int power, int truncation_order) {
  if (truncation_order < power || c.is_zero()) return zero(center, truncation_order);
  std::vector<EvenElement> coeffs(static_cast<std::size_t>(truncation_order - power + 1));
  coeffs[0] = c;
  return {center, power, std::move(coeffs), truncation_order};
}

LaurentSeries LaurentSeries::from_coeffs(EvenElement center, int valuation, std::vector<EvenElement> coeffs,
                                         double snap) {
  double largest = 0.0;
  for (const auto& c : coeffs) largest = std::max(largest, abs(c));
  const std::vector<double> scales(coeffs.size(), largest);
  return from_scaled(center, valuation, std::move(coeffs), scales, snap);
}

LaurentSeries LaurentSeries::from_scaled(EvenElement center, int valuation, std::vector<EvenElement> coeffs,
                                         std::span<const double> scales, double snap) {
  const int truncation = valuation + static_cast<int>(coeffs.size()) - 1;
  std::size_t lead = 0;
  while (lead < coeffs.size() && (coeffs[lead].is_zero() || abs(coeffs[lead]) <= snap * scales[lead])) ++lead;
  if (lead == coeffs.size()) return zero(center, truncation);
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
  return {center, valuation + static_cast<int>(lead), std::move(coeffs), truncation};
}

LaurentSeries LaurentSeries::from_polynomial(const Polynomial& p, EvenElement center, int truncation_order,
                                             double snap) {
  if (truncation_order < 0) return zero(center, truncation_order);
  auto t = p.taylor_at(center);
  t.resize(static_cast<std::size_t>(truncation_order + 1));
  // Rounding in the shift is relative to the Taylor coefficients of the
  // magnitude polynomial sum |c_k| x^k at |center|.
  std::vector<EvenElement> mags;
  for (const auto& c : p.coeffs()) mags.emplace_back(abs(c), 0.0);
  auto mt = Polynomial(std::move(mags)).taylor_at({abs(center), 0.0});
  std::vector<double> scales(t.size(), 0.0);
  for (std::size_t k = 0; k < std::min(mt.size(), scales.size()); ++k) scales[k] = mt[k].u;
  return from_scaled(center, 0, std::move(t), scales, snap);
}

EvenElement LaurentSeries::leading() const { return coeffs_.empty() ? EvenElement{} : coeffs_.front(); }

EvenElement LaurentSeries::coefficient(int n) const {
  if (n > truncation_order_) {
    throw std::out_of_range("coefficient of z'^" + std::to_string(n) + " is beyond the truncation order " +
                            std::to_string(truncation_order_));
  }
  if (n < valuation_) return {};
  return coeffs_[static_cast<std::size_t>(n - valuation_)];
}

EvenElement LaurentSeries::evaluate(EvenElement z) const {
  if (coeffs_.empty()) return {};
  const EvenElement s = z - center_;
  EvenElement acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
  return acc * even_int_pow(s, valuation_);
}

LaurentSeries LaurentSeries::truncated(int new_order) const {
  if (new_order >= truncation_order_) return *this;
  if (new_order < valuation_) return zero(center_, new_order);
  std::vector<EvenElement> c(coeffs_.begin(), coeffs_.begin() + (new_order - valuation_ + 1));
  return {center_, valuation_, std::move(c), new_order};
}

LaurentSeries LaurentSeries::shifted(int k) const {
  return {center_, valuation_ + k, coeffs_, truncation_order_ + k};
}

LaurentSeries LaurentSeries::scaled(EvenElement s) const {
  if (s.is_zero()) return zero(center_, truncation_order_);
  std::vector<EvenElement> c = coeffs_;
  for (auto& e : c) e = s * e;
  return {center_, valuation_, std::move(c), truncation_order_};
}

namespace {

void require_same_center(const LaurentSeries& a, const LaurentSeries& b) {
  if (!(a.center() == b.center())) {
    throw std::invalid_argument("series have different centers: " + to_string(a.center()) + " vs " +
                                to_string(b.center()));
  }
}

}  // namespace

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b, double snap) {
  require_same_center(a, b);
  const int v = a.valuation() + b.valuation();
  const int t = std::min(a.truncation_order() + b.valuation(), b.truncation_order() + a.valuation());
  if (a.is_zero() || b.is_zero() || t < v) return LaurentSeries::zero(a.center(), t);

  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<EvenElement> c(static_cast<std::size_t>(t - v + 1));
  for (std::size_t k = 0; k < c.size(); ++k) {
    EvenElement acc{};
    const std::size_t hi = std::min(k, ac.size() - 1);
    for (std::size_t i = 0; i <= hi; ++i) {
      if (k - i < bc.size()) acc += ac[i] * bc[k - i];
    }
    c[k] = acc;
  }
  // The leading product a_0 b_0 is not cancellation dust; strip exact zeros only.
  const std::vector<double> none(c.size(), 0.0);
  return LaurentSeries::from_scaled(a.center(), v, std::move(c), none, snap);
}

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b, double snap) {
  require_same_center(a, b);
  const int v = std::min(a.valuation(), b.valuation());
  const int t = std::min(a.truncation_order(), b.truncation_order());
  if (t < v) return LaurentSeries::zero(a.center(), t);
  std::vector<EvenElement> c(static_cast<std::size_t>(t - v + 1));
  std::vector<double> scales(c.size());
  for (int n = v; n <= t; ++n) {
    const auto k = static_cast<std::size_t>(n - v);
    c[k] = a.coefficient(n) + b.coefficient(n);
    scales[k] = std::max(abs(a.coefficient(n)), abs(b.coefficient(n)));
  }
  return LaurentSeries::from_scaled(a.center(), v, std::move(c), scales, snap);
}

LaurentSeries series_sub(const LaurentSeries& a, const LaurentSeries& b, double snap) {
  return series_add(a, b.scaled({-1.0, 0.0}), snap);
}

LaurentSeries series_inv(const LaurentSeries& a, double snap) {
  if (a.is_zero()) throw DivisionByZero("reciprocal of the zero series");
  const auto& c = a.coeffs();
  const EvenElement inv0 = even_inv(c[0]);
  std::vector<EvenElement> d(c.size());
  d[0] = inv0;
  for (std::size_t k = 1; k < d.size(); ++k) {
    EvenElement acc{};
    for (std::size_t j = 1; j <= k; ++j) acc += c[j] * d[k - j];
    d[k] = -(acc * inv0);
  }
  const std::vector<double> none(d.size(), 0.0);
  return LaurentSeries::from_scaled(a.center(), -a.valuation(), std::move(d), none, snap);
}

EvenElement entire_value(EntireKind kind, EvenElement scale, EvenElement z) {
  const EvenElement arg = scale * z;
  switch (kind) {
    case EntireKind::exp: return even_exp(arg);
    case EntireKind::sin: return even_sin(arg);
    case EntireKind::cos: return even_cos(arg);
  }
  return {};
}

LaurentSeries entire_series(EntireKind kind, EvenElement scale, EvenElement center, int order, double snap) {
  if (order < 0) throw std::invalid_argument("entire_series: order must be >= 0");
  const EvenElement a = scale * center;
  // Successive derivatives of kind at a, cycling with period 4 (1 for exp).
  std::vector<EvenElement> cycle;
  switch (kind) {
    case EntireKind::exp: cycle = {even_exp(a)}; break;
    case EntireKind::sin: cycle = {even_sin(a), even_cos(a), -even_sin(a), -even_cos(a)}; break;
    case EntireKind::cos: cycle = {even_cos(a), -even_sin(a), -even_cos(a), even_sin(a)}; break;
  }
  double cycle_scale = 0.0;
  for (const auto& e : cycle) cycle_scale = std::max(cycle_scale, abs(e));
  std::vector<EvenElement> c(static_cast<std::size_t>(order + 1));
  std::vector<double> scales(c.size());
  EvenElement power{1.0, 0.0};  // scale^n / n!
  for (int n = 0; n <= order; ++n) {
    if (n > 0) power = power * scale / static_cast<double>(n);
    const auto k = static_cast<std::size_t>(n);
    c[k] = cycle[k % cycle.size()] * power;
    scales[k] = cycle_scale * abs(power);
  }
  return LaurentSeries::from_scaled(center, 0, std::move(c), scales, snap);
}

}  // namespace kahler
