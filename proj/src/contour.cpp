#include "kahler/contour.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kahler/errors.hpp"

namespace kahler {

std::string to_string(HalfPlane h) {
  switch (h) {
    case HalfPlane::automatic: return "auto";
    case HalfPlane::upper: return "upper";
    case HalfPlane::lower: return "lower";
  }
  return "?";
}

std::vector<Pole> enclosed_poles(const CircleContour& c, const std::vector<Pole>& poles) {
  if (!(c.radius > 0.0)) throw std::invalid_argument("contour radius must be positive");
  std::vector<Pole> inside;
  for (const auto& p : poles) {
    const double d = abs(p.location - c.center);
    if (std::abs(d - c.radius) < c.clearance()) {
      throw PoleOnContour("pole at " + to_string(p.location) + " lies on the contour (distance " + format_real(d) +
                          " from the center, radius " + format_real(c.radius) + ")");
    }
    if (d < c.radius) inside.push_back(p);
  }
  return inside;
}

IntegralResult sum_residues(const MeromorphicFunction& f, std::vector<Pole> enclosed, double sign) {
  IntegralResult r;
  double defect_scale = 0.0;
  for (const auto& p : enclosed) {
    const EvenElement a = residue(f, p);
    r.residues.push_back(a);
    r.real_value += a.v;
    r.imaginary_defect += a.u;
    defect_scale += abs(a);
  }
  r.real_value *= -2.0 * std::numbers::pi * sign;
  r.imaginary_defect *= 2.0 * std::numbers::pi * sign;
  // No signed zeros in reported values.
  r.real_value += 0.0;
  r.imaginary_defect += 0.0;
  r.enclosed = std::move(enclosed);
  if (std::abs(r.imaginary_defect) > 1e-10 * 2.0 * std::numbers::pi * defect_scale) {
    r.warnings.push_back("imaginary_defect = " + format_real(r.imaginary_defect) +
                         ": the classical integral has an imaginary component that this real integral does "
                         "not produce");
  }
  return r;
}

IntegralResult integrate_closed(const MeromorphicFunction& f, const CircleContour& c) {
  auto inside = enclosed_poles(c, find_poles(f));
  return sum_residues(f, std::move(inside), c.orientation == Orientation::counterclockwise ? 1.0 : -1.0);
}

IntegralResult integrate_real_line(const MeromorphicFunction& h, HalfPlane half_plane) {
  const int gap = h.den().degree() - h.num().degree();
  HalfPlane required = HalfPlane::automatic;

  if (!h.factor()) {
    if (gap < 2) {
      throw DecayViolation("rational integrand needs deg(den) >= deg(num) + 2 to vanish on the closing "
                           "semicircle (have " + std::to_string(h.den().degree()) + " and " +
                           std::to_string(h.num().degree()) + ")");
    }
  } else if (h.factor()->kind == EntireKind::exp) {
    const EvenElement s = h.factor()->scale;
    if (s.u != 0.0) {
      throw DecayViolation("exp factor with scale " + to_string(s) +
                           " is unbounded on the real axis; only exp(I·t·x) is supported");
    }
    if (gap < 1) {
      throw DecayViolation("exp(I·t·x) integrand needs deg(den) >= deg(num) + 1");
    }
    required = s.v > 0.0 ? HalfPlane::upper : HalfPlane::lower;
  } else {
    throw DecayViolation(to_string(h.factor()->kind) +
                         " factor grows in both half planes; write it as a combination of exp(I·t·x) and "
                         "exp(-I·t·x) and integrate each part separately");
  }

  if (half_plane == HalfPlane::automatic) {
    half_plane = required == HalfPlane::automatic ? HalfPlane::upper : required;
  } else if (required != HalfPlane::automatic && half_plane != required) {
    throw DecayViolation("exp(I·t·x) decays only in the " + to_string(required) + " half plane, not the " +
                         to_string(half_plane));
  }

  std::vector<Pole> chosen;
  for (const auto& p : find_poles(h)) {
    if (std::abs(p.location.v) <= 1e-9) {
      throw ComputationError("pole at " + to_string(p.location) +
                             " lies on the real axis; principal values are not supported");
    }
    if ((half_plane == HalfPlane::upper) == (p.location.v > 0.0)) chosen.push_back(p);
  }
  // The real axis runs counterclockwise around the upper half plane and
  // clockwise around the lower one.
  return sum_residues(h, std::move(chosen), half_plane == HalfPlane::upper ? 1.0 : -1.0);
}

}  // namespace kahler
