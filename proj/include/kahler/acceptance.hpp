#pragma once

/**
 * @file acceptance.hpp
 * @brief The reference-value regression suite.
 *
 * Shared by the acceptance test binary and the CLI `check` verb. Every
 * randomized criterion draws from a fixed seed, so runs are reproducible.
 */

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kahler/contour.hpp"
#include "kahler/meromorphic.hpp"

namespace kahler::acceptance {

struct Criterion {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

Criterion line_integral_lorentzian();
Criterion line_integral_double_pole();
Criterion line_integral_fourier();
Criterion imaginary_contour();
Criterion angular_identity();
Criterion residue_cross_check();
Criterion form_classification();
Criterion contour_invariance();
Criterion algebra_suite();
Criterion laurent_display();

/// All criteria in order. A criterion that throws is reported as failed
/// with the exception text.
std::vector<Criterion> run_all();

/// "PASS  3  name: detail"
std::string format_line(const Criterion& c);

// --- random inputs shared with the property tests ---------------------------

struct RandomRational {
  MeromorphicFunction f;
  Polynomial num;
  std::vector<EvenElement> roots;
  std::vector<int> orders;

  /// num(z) / prod (z - r_i)^{m_i}: the construction itself, better
  /// conditioned near a multiple pole than the expanded denominator.
  EvenElement factored(EvenElement z) const;
};

/// Oracle circle quadrature of f dx for the factored form of r.
double factored_circle_integral(const RandomRational& r, const CircleContour& c);

/// num / prod (z - r_i)^{m_i} with 1..max_roots distinct roots in the square
/// [-2, 2]^2, pairwise at least min_separation apart, orders in
/// [1, max_order], total degree at most max_degree, and a random numerator of
/// lower degree with coefficients in the unit square.
RandomRational random_rational(std::mt19937_64& rng, int max_roots = 3, int max_order = 4, int max_degree = 8,
                               double min_separation = 0.5);

}  // namespace kahler::acceptance
