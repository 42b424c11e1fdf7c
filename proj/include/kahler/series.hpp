#pragma once

#include <span>
#include <string>
#include <vector>

#include "kahler/clifford.hpp"

namespace kahler {

class Polynomial;

/// Default number of retained coefficients in a local expansion.
inline constexpr int kDefaultWindow = 16;
/// Leading coefficients below this fraction of their magnitude scale count as
/// zero when locating the valuation.
inline constexpr double kDefaultSnap = 1e-13;

enum class EntireKind { exp, sin, cos };

std::string to_string(EntireKind kind);
/// Throws std::invalid_argument for names outside {exp, sin, cos}.
EntireKind entire_kind_from_string(const std::string& name);

/// Truncated Laurent series sum_{n = valuation}^{truncation_order} a_n z'^n,
/// z' = z - center. Coefficients below the valuation are exactly zero; those
/// above the truncation order are unknown.
class LaurentSeries {
public:
  /// The zero series known through truncation_order.
  static LaurentSeries zero(EvenElement center, int truncation_order);
  /// c z'^power, known through truncation_order.
  static LaurentSeries monomial(EvenElement center, EvenElement c, int power, int truncation_order);
  /// Builds from a_valuation, a_valuation+1, ...; strips snapped leading
  /// coefficients.
  static LaurentSeries from_coeffs(EvenElement center, int valuation, std::vector<EvenElement> coeffs,
                                   double snap = kDefaultSnap);
  /// As from_coeffs, but coefficient k is snapped against its own
  /// magnitude scale scales[k] (the size of the terms it was summed from).
  static LaurentSeries from_scaled(EvenElement center, int valuation, std::vector<EvenElement> coeffs,
                                   std::span<const double> scales, double snap = kDefaultSnap);
  /// Taylor expansion of a polynomial about center, known through
  /// truncation_order (exact: the tail is zero).
  static LaurentSeries from_polynomial(const Polynomial& p, EvenElement center, int truncation_order,
                                       double snap = kDefaultSnap);

  EvenElement center() const { return center_; }
  int valuation() const { return valuation_; }
  int truncation_order() const { return truncation_order_; }
  const std::vector<EvenElement>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  EvenElement leading() const;

  /// a_n. Zero below the valuation; throws std::out_of_range above the
  /// truncation order.
  EvenElement coefficient(int n) const;

  /// Truncated sum at z (z' = z - center).
  EvenElement evaluate(EvenElement z) const;

  /// Same series with coefficients above new_order dropped.
  LaurentSeries truncated(int new_order) const;
  /// Multiplies by z'^k.
  LaurentSeries shifted(int k) const;
  LaurentSeries scaled(EvenElement s) const;

private:
  LaurentSeries(EvenElement center, int valuation, std::vector<EvenElement> coeffs, int truncation_order)
      : center_(center), valuation_(valuation), truncation_order_(truncation_order), coeffs_(std::move(coeffs)) {}

  EvenElement center_;
  int valuation_ = 1;
  int truncation_order_ = 0;
  std::vector<EvenElement> coeffs_;
};

/// Cauchy product. Throws std::invalid_argument for mismatched centers.
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b, double snap = kDefaultSnap);
LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b, double snap = kDefaultSnap);
LaurentSeries series_sub(const LaurentSeries& a, const LaurentSeries& b, double snap = kDefaultSnap);
/// Reciprocal; keeps the number of known coefficients. Throws
/// DivisionByZero for the zero series.
LaurentSeries series_inv(const LaurentSeries& a, double snap = kDefaultSnap);

/// Taylor series of kind(scale * z) about center through z'^order.
/// Throws std::invalid_argument when order < 0.
LaurentSeries entire_series(EntireKind kind, EvenElement scale, EvenElement center, int order,
                            double snap = kDefaultSnap);

/// kind(scale * z) evaluated directly.
EvenElement entire_value(EntireKind kind, EvenElement scale, EvenElement z);

}  // namespace kahler
