#pragma once

/**
 * @file oracle.hpp
 * @brief Independent numeric checks of the residue results.
 *
 * Everything here integrates sampled values directly: the periodic trapezoid
 * rule on circles (spectrally accurate for analytic integrands, refined by
 * doubling) and panelled adaptive Simpson on a truncated real line with an
 * analytic bound on the discarded tails. Nothing in this file consults the
 * residue engine except differential_check, which compares against it.
 */

#include <string>

#include "kahler/contour.hpp"
#include "kahler/one_form.hpp"
#include "kahler/oracle_kernels.hpp"

namespace kahler {

using kernels::Execution;

struct QuadratureSpec {
  int n_points = 16;          ///< initial circle nodes; >= 16 and even
  double tail_cutoff = 1e4;   ///< real-line truncation radius
  double tol = 1e-12;         ///< target relative error
  int max_points = 1 << 20;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct CircleQuadrature {
  double value = 0.0;
  std::size_t n_points = 0;
  double last_change = 0.0;
};

/// Integral of k dx + g dy over the circle (orientation respected). Doubles the
/// node count until two successive changes fall below tol * max(|I|, I_abs),
/// I_abs the integral of |k dx| + |g dy|. Throws QuadratureFailure on a
/// non-finite sample or when max_points is reached.
CircleQuadrature quad_circle(const PlaneFunction& k, const PlaneFunction& g, const CircleContour& c,
                             const QuadratureSpec& spec = {}, Execution ex = Execution::parallel);

/// Fixed-n trapezoid estimate, for convergence studies.
double trapezoid_circle(const PlaneFunction& k, const PlaneFunction& g, const CircleContour& c, std::size_t n,
                        Execution ex = Execution::parallel);

/// |H(x)| <= leading_constant / |x|^degree_gap for large |x|; a nonzero
/// frequency means H is the real part of R(x) exp(I frequency x).
struct TailModel {
  int degree_gap = 2;
  double leading_constant = 1.0;
  double frequency = 0.0;
};

/// Bound on the two discarded tails |x| > cutoff (conservative factor 2).
double tail_bound(const TailModel& tail, double cutoff);
/// Smallest power-of-two cutoff whose tail bound is within budget.
double suggest_tail_cutoff(const TailModel& tail, double budget);

struct LineQuadrature {
  double value = 0.0;
  double tail_bound = 0.0;
  std::size_t panels = 0;
};

/// Integral of H over the real line: adaptive Simpson on
/// [-tail_cutoff, tail_cutoff] to tol/2 plus a tail bound that must itself be
/// within tol/2. Throws QuadratureFailure when the tail bound is too large or
/// a sample is not finite.
LineQuadrature quad_real_line(const std::function<double(double)>& h, const TailModel& tail,
                              const QuadratureSpec& spec, Execution ex = Execution::parallel);

// --- adapters from meromorphic functions ------------------------------------

/// k = u(f), g = -v(f): the real 1-form f dx.
OneForm real_form(const MeromorphicFunction& f);
/// k = v(f), g = u(f): the form whose integral is the classical imaginary part.
OneForm dual_form(const MeromorphicFunction& f);
TailModel tail_model(const MeromorphicFunction& h);

struct DifferentialReport {
  bool passed = false;
  double symbolic = 0.0;
  double numeric = 0.0;
  double symbolic_defect = 0.0;
  double numeric_defect = 0.0;
  std::size_t n_points = 0;
  std::string detail;
};

/// integrate_closed against quad_circle on the same circle; passes when both
/// the real value and the imaginary defect agree to tol * (1 + |value|).
/// Failures of either side are reported, not thrown.
DifferentialReport differential_check(const MeromorphicFunction& f, const CircleContour& c, double tol,
                                      const QuadratureSpec& spec = {}, Execution ex = Execution::parallel);

}  // namespace kahler
