#include "kahler/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "kahler/errors.hpp"

namespace kahler {

void QuadratureSpec::validate() const {
  if (n_points < 16 || n_points % 2 != 0) throw std::invalid_argument("n_points must be even and >= 16");
  if (!(tail_cutoff > 0.0)) throw std::invalid_argument("tail_cutoff must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (max_points < n_points) throw std::invalid_argument("max_points must be >= n_points");
}

double trapezoid_circle(const PlaneFunction& k, const PlaneFunction& g, const CircleContour& c, std::size_t n,
                        Execution ex) {
  const auto s = kernels::circle_nodes(ex, k, g, c.center, c.radius, n, 0, 1, n);
  const double sign = c.orientation == Orientation::counterclockwise ? 1.0 : -1.0;
  return sign * s.sum * (2.0 * std::numbers::pi / static_cast<double>(n));
}

CircleQuadrature quad_circle(const PlaneFunction& k, const PlaneFunction& g, const CircleContour& c,
                             const QuadratureSpec& spec, Execution ex) {
  spec.validate();
  if (!(c.radius > 0.0)) throw std::invalid_argument("contour radius must be positive");
  auto n = static_cast<std::size_t>(spec.n_points);
  auto nodes = kernels::circle_nodes(ex, k, g, c.center, c.radius, n, 0, 1, n);
  double estimate = nodes.sum * (2.0 * std::numbers::pi / static_cast<double>(n));
  int quiet = 0;
  for (;;) {
    if (!std::isfinite(nodes.sum)) {
      throw QuadratureFailure("non-finite integrand sample on the circle (a pole on or near the contour?)");
    }
    if (2 * n > static_cast<std::size_t>(spec.max_points)) {
      throw QuadratureFailure("circle quadrature did not converge with " + std::to_string(n) + " nodes");
    }
    // The new nodes of the doubled rule are the odd ones.
    const auto odd = kernels::circle_nodes(ex, k, g, c.center, c.radius, 2 * n, 1, 2, n);
    nodes.sum += odd.sum;
    nodes.abs_sum += odd.abs_sum;
    n *= 2;
    const double h = 2.0 * std::numbers::pi / static_cast<double>(n);
    const double next = nodes.sum * h;
    const double change = std::abs(next - estimate);
    estimate = next;
    const double scale = std::max(std::abs(next), nodes.abs_sum * h);
    quiet = (change <= spec.tol * scale) ? quiet + 1 : 0;
    if (quiet >= 2 && std::isfinite(next)) {
      const double sign = c.orientation == Orientation::counterclockwise ? 1.0 : -1.0;
      return {sign * next, n, change};
    }
  }
}

double tail_bound(const TailModel& tail, double cutoff) {
  const double c = tail.leading_constant;
  double bound = std::numeric_limits<double>::infinity();
  if (tail.degree_gap >= 2) {
    bound = 4.0 * c * std::pow(cutoff, 1.0 - tail.degree_gap) / (tail.degree_gap - 1);
  }
  if (tail.frequency != 0.0 && tail.degree_gap >= 1) {
    // One integration by parts against exp(I w x).
    bound = std::min(bound, 8.0 * c * std::pow(cutoff, -tail.degree_gap) / std::abs(tail.frequency));
  }
  return bound;
}

double suggest_tail_cutoff(const TailModel& tail, double budget) {
  double cutoff = 1.0;
  for (int i = 0; i < 80 && tail_bound(tail, cutoff) > budget; ++i) cutoff *= 2.0;
  return cutoff;
}

LineQuadrature quad_real_line(const std::function<double(double)>& h, const TailModel& tail,
                              const QuadratureSpec& spec, Execution ex) {
  spec.validate();
  const double cutoff = spec.tail_cutoff;
  const double budget = 0.5 * spec.tol;
  const double bound = tail_bound(tail, cutoff);
  if (!(bound <= budget)) {
    throw QuadratureFailure("tail bound " + format_real(bound) + " exceeds the truncation budget " +
                            format_real(budget) + "; use a tail cutoff of at least " +
                            format_real(suggest_tail_cutoff(tail, budget)));
  }

  // Unit panels (or half periods) through the core, geometric panels beyond.
  const double width = tail.frequency != 0.0 ? std::min(1.0, std::numbers::pi / std::abs(tail.frequency)) : 1.0;
  const double core = tail.frequency != 0.0 ? cutoff : std::min(cutoff, 64.0);
  const auto uniform = static_cast<std::size_t>(std::ceil(2.0 * core / width));
  if (uniform > 50'000'000) throw QuadratureFailure("real-line quadrature would need too many panels");

  std::vector<kernels::Panel> panels;
  panels.reserve(uniform + 128);
  const double step = 2.0 * core / static_cast<double>(uniform);
  for (std::size_t i = 0; i < uniform; ++i) {
    const double lo = -core + step * static_cast<double>(i);
    panels.push_back({lo, i + 1 == uniform ? core : lo + step, 0.0});
  }
  for (double lo = core; lo < cutoff;) {
    const double hi = std::min(2.0 * lo, cutoff);
    panels.push_back({lo, hi, 0.0});
    panels.push_back({-hi, -lo, 0.0});
    lo = hi;
  }
  const double per_panel = (spec.tol - bound) / static_cast<double>(panels.size());
  for (auto& p : panels) p.tol = per_panel;

  const auto parts = kernels::simpson_panels(ex, h, panels);
  double total = 0.0;
  for (double v : parts) total += v;
  if (!std::isfinite(total)) throw QuadratureFailure("non-finite integrand sample on the real line");
  return {total, bound, panels.size()};
}

OneForm real_form(const MeromorphicFunction& f) {
  OneForm form;
  form.k = [f](double x, double y) { return f({x, y}).u; };
  form.g = [f](double x, double y) { return -f({x, y}).v; };
  return form;
}

OneForm dual_form(const MeromorphicFunction& f) {
  OneForm form;
  form.k = [f](double x, double y) { return f({x, y}).v; };
  form.g = [f](double x, double y) { return f({x, y}).u; };
  return form;
}

TailModel tail_model(const MeromorphicFunction& h) {
  TailModel t;
  t.degree_gap = h.den().degree() - h.num().degree();
  t.leading_constant = abs(h.num().leading()) / abs(h.den().leading());
  if (h.factor() && h.factor()->kind == EntireKind::exp) t.frequency = h.factor()->scale.v;
  return t;
}

DifferentialReport differential_check(const MeromorphicFunction& f, const CircleContour& c, double tol,
                                      const QuadratureSpec& spec, Execution ex) {
  DifferentialReport r;
  try {
    const auto sym = integrate_closed(f, c);
    r.symbolic = sym.real_value;
    r.symbolic_defect = sym.imaginary_defect;
  } catch (const std::exception& e) {
    r.detail = std::string("symbolic side failed: ") + e.what();
    return r;
  }
  try {
    const auto re = real_form(f);
    const auto im = dual_form(f);
    const auto q = quad_circle(re.k, re.g, c, spec, ex);
    r.numeric = q.value;
    r.n_points = q.n_points;
    r.numeric_defect = quad_circle(im.k, im.g, c, spec, ex).value;
  } catch (const std::exception& e) {
    r.detail = std::string("quadrature failed: ") + e.what();
    return r;
  }
  const double diff = std::abs(r.symbolic - r.numeric);
  const double diff_defect = std::abs(r.symbolic_defect - r.numeric_defect);
  r.passed = diff <= tol * (1.0 + std::abs(r.symbolic)) && diff_defect <= tol * (1.0 + std::abs(r.symbolic_defect));
  r.detail = "value diff " + format_real(diff) + ", defect diff " + format_real(diff_defect);
  return r;
}

}  // namespace kahler
