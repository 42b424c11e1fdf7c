#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kahler/clifford.hpp"

namespace kahler {

class MeromorphicFunction;

using PlaneFunction = std::function<double(double x, double y)>;

/// alpha = k dx + g dy, equivalently w dx with w = k - g dxdy.
struct OneForm {
  PlaneFunction k;
  PlaneFunction g;
  /// Known singular points; samples closer than the clearance are rejected.
  std::vector<EvenElement> singularities;

  /// k = u-part of w, g = -(v-part of w).
  static OneForm from_w(const MeromorphicFunction& w);
  /// The even element w = k - g dxdy at (x, y).
  EvenElement w_at(double x, double y) const { return {k(x, y), -g(x, y)}; }
  Multivector at(double x, double y) const { return Multivector::one_form(k(x, y), g(x, y)); }
};

enum class FormClass { not_closed, closed_only, closed_and_cr };

std::string to_string(FormClass c);

struct ClassifyOptions {
  double step = 1e-6;
  double tolerance = 1e-5;
  double clearance = 1e-6;
};

/// Tests closedness (k_y = g_x) and the remaining Cauchy–Riemann condition
/// (k_x = -g_y) by central differences at every sample. Throws
/// ComputationError when a sample is within the clearance of a singularity or
/// an evaluation is not finite.
FormClass classify_one_form(const OneForm& form, std::span<const EvenElement> samples,
                            const ClassifyOptions& opts = {});

}  // namespace kahler
