#include "kahler/oracle_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>

namespace kahler::kernels {

namespace {

NodeSum block_sum(const PlaneFunction& k, const PlaneFunction& g, EvenElement center, double radius,
                  std::size_t n, std::size_t first, std::size_t stride, std::size_t begin, std::size_t end) {
  NodeSum s;
  const double dt = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t i = begin; i < end; ++i) {
    const double t = dt * static_cast<double>(first + i * stride);
    const double c = std::cos(t);
    const double sn = std::sin(t);
    const double x = center.u + radius * c;
    const double y = center.v + radius * sn;
    const double kx = k(x, y) * (-radius * sn);
    const double gy = g(x, y) * (radius * c);
    s.sum += kx + gy;
    s.abs_sum += std::abs(kx) + std::abs(gy);
  }
  return s;
}

// Exceptions must not leave an OpenMP region; the first one is kept and
// rethrown by the calling thread.
class ErrorSlot {
public:
  template <class F>
  void run(F&& body) {
    try {
      body();
    } catch (...) {
#pragma omp critical(kahler_kernel_error)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

private:
  std::exception_ptr error_;
};

NodeSum reduce(const std::vector<NodeSum>& blocks) {
  NodeSum total;
  for (const auto& b : blocks) {
    total.sum += b.sum;
    total.abs_sum += b.abs_sum;
  }
  return total;
}

struct SimpsonState {
  const LineFunction& f;

  double recurse(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) const {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    // Stop at the tolerance, at the rounding floor, or at the depth limit.
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol ||
        std::abs(delta) <= 1e-14 * (std::abs(left) + std::abs(right)) || !std::isfinite(delta)) {
      return left + right + delta / 15.0;
    }
    return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
  }
};

}  // namespace

NodeSum circle_nodes_serial(const PlaneFunction& k, const PlaneFunction& g, EvenElement center, double radius,
                            std::size_t n, std::size_t first, std::size_t stride, std::size_t count) {
  const std::size_t blocks = (count + kBlock - 1) / kBlock;
  std::vector<NodeSum> partial(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    partial[b] = block_sum(k, g, center, radius, n, first, stride, b * kBlock, std::min(count, (b + 1) * kBlock));
  }
  return reduce(partial);
}

NodeSum circle_nodes_parallel(const PlaneFunction& k, const PlaneFunction& g, EvenElement center, double radius,
                              std::size_t n, std::size_t first, std::size_t stride, std::size_t count) {
  const std::size_t blocks = (count + kBlock - 1) / kBlock;
  std::vector<NodeSum> partial(blocks);
  const auto nb = static_cast<long long>(blocks);
  ErrorSlot slot;
#pragma omp parallel for schedule(static)
  for (long long b = 0; b < nb; ++b) {
    const auto ub = static_cast<std::size_t>(b);
    slot.run([&] {
      partial[ub] = block_sum(k, g, center, radius, n, first, stride, ub * kBlock, std::min(count, (ub + 1) * kBlock));
    });
  }
  slot.rethrow();
  return reduce(partial);
}

NodeSum circle_nodes(Execution ex, const PlaneFunction& k, const PlaneFunction& g, EvenElement center, double radius,
                     std::size_t n, std::size_t first, std::size_t stride, std::size_t count) {
  return ex == Execution::serial ? circle_nodes_serial(k, g, center, radius, n, first, stride, count)
                                 : circle_nodes_parallel(k, g, center, radius, n, first, stride, count);
}

double adaptive_simpson(const LineFunction& f, double lo, double hi, double tol, int max_depth) {
  const double fa = f(lo);
  const double fb = f(hi);
  const double fm = f(0.5 * (lo + hi));
  const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
  return SimpsonState{f}.recurse(lo, hi, fa, fm, fb, whole, tol, max_depth);
}

std::vector<double> simpson_panels_serial(const LineFunction& f, std::span<const Panel> panels) {
  std::vector<double> out(panels.size());
  for (std::size_t i = 0; i < panels.size(); ++i) {
    out[i] = adaptive_simpson(f, panels[i].lo, panels[i].hi, panels[i].tol);
  }
  return out;
}

std::vector<double> simpson_panels_parallel(const LineFunction& f, std::span<const Panel> panels) {
  std::vector<double> out(panels.size());
  const auto np = static_cast<long long>(panels.size());
  ErrorSlot slot;
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < np; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    slot.run([&] { out[ui] = adaptive_simpson(f, panels[ui].lo, panels[ui].hi, panels[ui].tol); });
  }
  slot.rethrow();
  return out;
}

std::vector<double> simpson_panels(Execution ex, const LineFunction& f, std::span<const Panel> panels) {
  return ex == Execution::serial ? simpson_panels_serial(f, panels) : simpson_panels_parallel(f, panels);
}

}  // namespace kahler::kernels
