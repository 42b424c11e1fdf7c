#pragma once

#include <string>
#include <vector>

#include "kahler/meromorphic.hpp"
#include "kahler/series.hpp"

namespace kahler {

enum class ResidueMethod { series, order_reduction, derivative_formula };

std::string to_string(ResidueMethod m);

/// One step of order reduction: the coefficient a of z'^power removed from
/// the remaining principal part.
struct Extraction {
  int power = 0;
  EvenElement coefficient;
};

struct ResidueReport {
  Pole pole;
  EvenElement a_minus_1;
  /// Coefficient of the most singular term, lim z'^m f.
  EvenElement leading;
  ResidueMethod method = ResidueMethod::series;
  /// Order reduction only: the extracted coefficients, most singular first,
  /// and the remainder series after each subtraction.
  std::vector<Extraction> extractions;
  std::vector<LaurentSeries> remainders;
};

/// Coefficient of z'^-1 in the local expansion at the pole.
EvenElement residue(const MeromorphicFunction& f, const Pole& p, int window = kDefaultWindow);
ResidueReport residue_report(const MeromorphicFunction& f, const Pole& p, int window = kDefaultWindow);

/// Repeatedly takes a_m = lim z'^m F and replaces F with F - a_m / z'^m
/// until no pole remains. Subtraction happens on the local series.
ResidueReport residue_by_order_reduction(const MeromorphicFunction& f, const Pole& p,
                                         int window = kDefaultWindow);

/// a_-1 = g^(m-1)(z0) / (m-1)! with g = z'^m f, the derivative taken along x
/// by Richardson-extrapolated central differences. A numeric cross-check,
/// not a source of truth.
ResidueReport residue_by_derivative_formula(const MeromorphicFunction& f, const Pole& p);

/// k-th x-derivative of z'^m f at the pole, g evaluated in factored form so
/// the pole cancels exactly. Richardson extrapolation from initial step
/// `step` (0 picks a fraction of the distance to the nearest other root).
EvenElement regularized_x_derivative(const MeromorphicFunction& f, const Pole& p, int k, double step = 0.0);

struct CauchyValue {
  EvenElement value;     ///< f(z0)
  bool applicable = false;
  EvenElement integral;  ///< 2 pi dxdy f(z0)
};

/// Applicability: f(z0) is a pure 2-form, |u| <= 1e-10 (|u| + |v| + 1e-300).
bool is_two_form(EvenElement e, double tol = 1e-10);

/// Throws ComputationError when z0 is a pole of f.
CauchyValue cauchy_evaluate(const MeromorphicFunction& f, EvenElement z0);

struct CauchyDerivative {
  EvenElement derivative;  ///< n-th x-derivative of f at z0
  bool applicable = false;
  EvenElement integral;    ///< (2 pi / n!) dxdy derivative
};

CauchyDerivative cauchy_derivative(const MeromorphicFunction& f, EvenElement z0, int n);

inline constexpr int kMaxLaurentWindow = 64;

/// Coefficients a_from .. a_to about z0. Throws UsageError for from > to or
/// a window wider than max_window.
LaurentSeries laurent_expand(const MeromorphicFunction& f, EvenElement z0, int from, int to,
                             int max_window = kMaxLaurentWindow);

/// b_0 .. b_{count-1} of the regular function z'^m f at z0, m the pole order
/// (0 at regular points).
std::vector<EvenElement> regularized_taylor(const MeromorphicFunction& f, EvenElement z0, int count);

}  // namespace kahler
