#pragma once

/**
 * @file oracle_kernels.hpp
 * @brief Data-parallel quadrature kernels behind the oracle.
 *
 * Each kernel has a serial reference and an OpenMP version. Both accumulate
 * the same fixed blocks in the same order, so their results are bit-identical
 * regardless of the thread count.
 */

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "kahler/clifford.hpp"

namespace kahler::kernels {

enum class Execution { serial, parallel };

using PlaneFunction = std::function<double(double x, double y)>;
using LineFunction = std::function<double(double x)>;

/// Nodes summed per block; fixed so serial and parallel agree exactly.
inline constexpr std::size_t kBlock = 256;

struct NodeSum {
  double sum = 0.0;      ///< sum of k x'(t) + g y'(t)
  double abs_sum = 0.0;  ///< sum of |k x'(t)| + |g y'(t)|, the scale before cancellation
};

/// Sums the pulled-back integrand k dx/dt + g dy/dt of the circle
/// x = cx + r cos t, y = cy + r sin t over the nodes t_j = 2 pi j / n for
/// j = first, first + stride, ... (count nodes).
NodeSum circle_nodes_serial(const PlaneFunction& k, const PlaneFunction& g, EvenElement center, double radius,
                            std::size_t n, std::size_t first, std::size_t stride, std::size_t count);
NodeSum circle_nodes_parallel(const PlaneFunction& k, const PlaneFunction& g, EvenElement center, double radius,
                              std::size_t n, std::size_t first, std::size_t stride, std::size_t count);
NodeSum circle_nodes(Execution ex, const PlaneFunction& k, const PlaneFunction& g, EvenElement center,
                     double radius, std::size_t n, std::size_t first, std::size_t stride, std::size_t count);

struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  double tol = 0.0;  ///< absolute tolerance for this panel
};

/// Adaptive Simpson (with Richardson correction) on each panel; one result
/// per panel, in panel order.
std::vector<double> simpson_panels_serial(const LineFunction& f, std::span<const Panel> panels);
std::vector<double> simpson_panels_parallel(const LineFunction& f, std::span<const Panel> panels);
std::vector<double> simpson_panels(Execution ex, const LineFunction& f, std::span<const Panel> panels);

/// Adaptive Simpson on a single interval.
double adaptive_simpson(const LineFunction& f, double lo, double hi, double tol, int max_depth = 40);

}  // namespace kahler::kernels
