#pragma once

#include <string>
#include <vector>

#include "kahler/meromorphic.hpp"
#include "kahler/residue.hpp"

namespace kahler {

enum class Orientation { counterclockwise, clockwise };

struct CircleContour {
  EvenElement center;
  double radius = 1.0;
  Orientation orientation = Orientation::counterclockwise;
  /// Width of the band around the circle that must be free of poles,
  /// relative to the radius.
  double relative_clearance = 1e-6;

  double clearance() const { return relative_clearance * radius; }
};

struct IntegralResult {
  /// The integral of the real 1-form k dx + g dy, -2 pi sum v(a_-1).
  double real_value = 0.0;
  /// 2 pi sum u(a_-1): the part of the classical complex integral that the
  /// real formalism does not produce.
  double imaginary_defect = 0.0;
  std::vector<Pole> enclosed;
  std::vector<EvenElement> residues;
  std::vector<std::string> warnings;
};

/// Poles strictly inside the circle. Throws PoleOnContour for poles within
/// the clearance band; throws std::invalid_argument for radius <= 0.
std::vector<Pole> enclosed_poles(const CircleContour& c, const std::vector<Pole>& poles);

/// Closed-contour integral of f dx by residues at the enclosed poles.
IntegralResult integrate_closed(const MeromorphicFunction& f, const CircleContour& c);

enum class HalfPlane { automatic, upper, lower };

std::string to_string(HalfPlane h);

/// Integral of H(x) dx over the real line, closing the contour in a half plane
/// on which H decays. Throws DecayViolation when the degree rule fails or the
/// chosen half plane does not damp the exponential factor, and ComputationError
/// for poles on the real axis.
IntegralResult integrate_real_line(const MeromorphicFunction& h, HalfPlane half_plane = HalfPlane::automatic);

/// Assembles an IntegralResult from residues, for a counterclockwise (sign
/// +1) or clockwise (sign -1) boundary.
IntegralResult sum_residues(const MeromorphicFunction& f, std::vector<Pole> enclosed, double sign);

}  // namespace kahler
