#include "kahler/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>

#include "kahler/contour.hpp"
#include "kahler/expr.hpp"
#include "kahler/one_form.hpp"
#include "kahler/oracle.hpp"
#include "kahler/residue.hpp"

namespace kahler::acceptance {

namespace {

constexpr double kPi = std::numbers::pi;

MeromorphicFunction line_function(const std::string& text, std::map<std::string, double> bindings = {}) {
  return to_meromorphic(parse(text, {ParseMode::real_line, std::move(bindings)}));
}

MeromorphicFunction contour_function(const std::string& text) {
  return to_meromorphic(parse(text, {ParseMode::contour, {}}));
}

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

EvenElement random_point(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return {d(rng), d(rng)};
}

// Tracks the worst observed error across a randomized criterion.
struct Worst {
  double error = 0.0;
  int failures = 0;

  void observe(double e, double limit) {
    if (!(e <= limit)) ++failures;
    if (std::isnan(e) || e > error) error = e;
  }
};

}  // namespace

RandomRational random_rational(std::mt19937_64& rng, int max_roots, int max_order, int max_degree,
                               double min_separation) {
  std::uniform_int_distribution<int> count_dist(1, max_roots);
  std::uniform_int_distribution<int> order_dist(1, max_order);
  RandomRational r;
  const int count = count_dist(rng);
  int degree = 0;
  for (int attempts = 0; static_cast<int>(r.roots.size()) < count && attempts < 1000; ++attempts) {
    const EvenElement c = random_point(rng, -2.0, 2.0);
    const bool separated = std::all_of(r.roots.begin(), r.roots.end(),
                                       [&](EvenElement o) { return abs(c - o) >= min_separation; });
    if (!separated) continue;
    const int m = std::min(order_dist(rng), max_degree - degree);
    if (m < 1) break;
    r.roots.push_back(c);
    r.orders.push_back(m);
    degree += m;
  }

  Polynomial den(EvenElement{1.0});
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    den = den * Polynomial({-r.roots[i], EvenElement{1.0}}).pow(static_cast<unsigned>(r.orders[i]));
  }
  std::uniform_int_distribution<int> num_degree(0, degree - 1);
  std::vector<EvenElement> num(static_cast<std::size_t>(num_degree(rng) + 1));
  for (auto& c : num) c = random_point(rng, -1.0, 1.0);
  r.num = Polynomial(std::move(num));
  r.f = MeromorphicFunction(r.num, den);
  return r;
}

EvenElement RandomRational::factored(EvenElement z) const {
  EvenElement den{1.0};
  for (std::size_t i = 0; i < roots.size(); ++i) den *= even_int_pow(z - roots[i], orders[i]);
  return num(z) / den;
}

double factored_circle_integral(const RandomRational& r, const CircleContour& c) {
  const auto k = [&r](double x, double y) { return r.factored({x, y}).u; };
  const auto g = [&r](double x, double y) { return -r.factored({x, y}).v; };
  return quad_circle(k, g, c).value;
}

Criterion line_integral_lorentzian() {
  Criterion c{1, "line integral of 1/(x^2+1) is pi", false, {}};
  const double v = integrate_real_line(line_function("1/(x^2+1)")).real_value;
  const double err = std::abs(v - kPi);
  c.passed = err <= 1e-10;
  c.detail = "value " + format_real(v) + ", error " + sci(err);
  return c;
}

Criterion line_integral_double_pole() {
  Criterion c{2, "line integral of 1/(x^2+1)^2 is pi/2 by order reduction and by the derivative formula", false, {}};
  const auto h = line_function("1/(x^2+1)^2");
  const double target = kPi / 2.0;

  // Order reduction at every pole in the upper half plane.
  double by_reduction = 0.0;
  EvenElement a2{};
  bool a2_found = false;
  for (const auto& p : find_poles(h)) {
    if (p.location.v <= 0.0) continue;
    const auto report = residue_by_order_reduction(h, p);
    by_reduction += -2.0 * kPi * report.a_minus_1.v;
    if (abs(p.location - EvenElement::unit()) < 1e-12 && !report.extractions.empty() &&
        report.extractions.front().power == -2) {
      a2 = report.extractions.front().coefficient;
      a2_found = true;
    }
  }

  // Cauchy's derivative formula: f = (z + I)^-2 around z0 = I with n = 1.
  const auto f = contour_function("(z+I)^(-2)");
  const auto d = cauchy_derivative(f, EvenElement::unit(), 1);
  const double by_derivative = d.integral.u;

  const double by_line = integrate_real_line(h).real_value;
  const double e1 = std::abs(by_reduction - target);
  const double e2 = std::abs(by_derivative - target);
  const double e3 = std::abs(by_line - target);
  const double ea = abs(a2 - EvenElement{-0.25, 0.0});
  c.passed = e1 <= 1e-10 && e2 <= 1e-10 && e3 <= 1e-10 && a2_found && ea <= 1e-12 && d.applicable &&
             std::abs(d.integral.v) <= 1e-10;
  c.detail = "order reduction " + format_real(by_reduction) + ", derivative formula " + format_real(by_derivative) +
             ", residue sum " + format_real(by_line) + ", a_2 = " + to_string(a2) + " (errors " + sci(e1) + ", " +
             sci(e2) + ", " + sci(e3) + ", " + sci(ea) + ")";
  return c;
}

Criterion line_integral_fourier() {
  Criterion c{3, "line integral of exp(I t x)/(x^2+1) is pi exp(-t)", false, {}};
  double worst = 0.0;
  std::string values;
  for (double t : {0.5, 1.0, 2.0}) {
    const double v = integrate_real_line(line_function("exp(I*t*x)/(x^2+1)", {{"t", t}})).real_value;
    worst = std::max(worst, std::abs(v - kPi * std::exp(-t)));
    values += (values.empty() ? "" : ", ") + ("t=" + format_real(t) + ": " + format_real(v));
  }
  c.passed = worst <= 1e-9;
  c.detail = values + "; max error " + sci(worst);
  return c;
}

Criterion imaginary_contour() {
  Criterion c{4, "unit circle around 1/(z(z-pi)) has value 0 and defect -2", false, {}};
  const auto f = contour_function("1/(z*(z-pi))");
  const CircleContour unit{{0.0, 0.0}, 1.0};
  const auto r = integrate_closed(f, unit);
  const auto dual = dual_form(f);
  const double quadrature = quad_circle(dual.k, dual.g, unit).value;
  const double ev = std::abs(r.real_value);
  const double ed = std::abs(r.imaginary_defect + 2.0);
  const double eq = std::abs(quadrature + 2.0);
  c.passed = ev <= 1e-10 && ed <= 1e-10 && eq <= 1e-10 && !r.warnings.empty();
  c.detail = "value " + format_real(r.real_value) + ", defect " + format_real(r.imaginary_defect) +
             ", quadrature of the dual form " + format_real(quadrature) + ", " + std::to_string(r.warnings.size()) +
             " warning(s)";
  return c;
}

Criterion angular_identity() {
  Criterion c{5, "j = rho^2 (alpha . dphi) equals -(w z) dxdy part on 500 samples", false, {}};
  std::mt19937_64 rng(0x5eed0005);
  std::uniform_real_distribution<double> rho_dist(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> phi_dist(-kPi, kPi);
  Worst worst;
  for (int i = 0; i < 500; ++i) {
    const EvenElement z = from_polar({std::exp(rho_dist(rng)), phi_dist(rng)});
    // A random polynomial in z evaluated at the sample point.
    EvenElement w{};
    for (int k = 0; k < 4; ++k) w = w * z + random_point(rng, -1.0, 1.0);
    const Multivector alpha = Multivector::one_form(w.u, -w.v);
    const double j = angular_coefficient(alpha, z);
    const double expected = -(w * z).v;
    worst.observe(std::abs(j - expected) / (abs(w) * abs(z)), 1e-12);
  }
  c.passed = worst.failures == 0;
  c.detail = "max relative error " + sci(worst.error) + ", " + std::to_string(worst.failures) + " failure(s)";
  return c;
}

Criterion residue_cross_check() {
  Criterion c{6, "series residues match finite differences and circle quadrature on 200 rationals", false, {}};
  std::mt19937_64 rng(0x5eed0006);
  Worst fd;
  Worst quad;
  int poles = 0;
  int vanishing = 0;
  for (int i = 0; i < 200; ++i) {
    const auto r = random_rational(rng, 3, 4, 8, 0.5);
    const auto found = find_poles(r.f);
    for (const auto& p : found) {
      ++poles;
      double nearest = 1.0;
      for (const auto& q : found) {
        if (&q != &p) nearest = std::min(nearest, abs(q.location - p.location));
      }
      const double radius = 0.4 * nearest;

      const EvenElement a = residue(r.f, p);
      // Relative error is measured against |a_-1|. A residue that vanishes
      // (c / z'^2, say) has no relative error; its yardstick is the size of
      // the principal part on the quadrature circle, sum |a_-k| r^(1-k).
      const auto principal = laurent_expand(r.f, p.location, -p.order, -1);
      double size = 0.0;
      for (int k = 1; k <= p.order; ++k) size += abs(principal.coefficient(-k)) * std::pow(radius, 1 - k);
      double yardstick = abs(a);
      if (yardstick <= 1e-12 * size) {
        yardstick = size;
        ++vanishing;
      }

      const EvenElement b = residue_by_derivative_formula(r.f, p).a_minus_1;
      fd.observe(abs(a - b) / yardstick, 1e-6);
      const double numeric = factored_circle_integral(r, {p.location, radius});
      quad.observe(std::abs(numeric + 2.0 * kPi * a.v) / (2.0 * kPi * yardstick), 1e-7);
    }
  }
  c.passed = fd.failures == 0 && quad.failures == 0 && poles > 0;
  c.detail = std::to_string(poles) + " poles (" + std::to_string(vanishing) +
             " with vanishing residue); finite differences max relative error " + sci(fd.error) +
             ", quadrature max relative error " + sci(quad.error);
  return c;
}

Criterion form_classification() {
  Criterion c{7, "closedness and Cauchy-Riemann classification", false, {}};
  std::mt19937_64 rng(0x5eed0007);
  std::uniform_real_distribution<double> rho_dist(0.5, 2.0);
  std::uniform_real_distribution<double> phi_dist(-kPi, kPi);
  std::vector<EvenElement> samples;
  for (int i = 0; i < 25; ++i) samples.push_back(from_polar({rho_dist(rng), phi_dist(rng)}));

  int analytic_ok = 0;
  for (int i = 0; i < 20; ++i) {
    // sum_{n=-3}^{5} c_n z^n
    std::vector<EvenElement> coeffs;
    for (int n = -3; n <= 5; ++n) coeffs.push_back(random_point(rng, -1.0, 1.0));
    auto w = [coeffs](double x, double y) {
      const EvenElement z{x, y};
      EvenElement acc{};
      for (int n = -3; n <= 5; ++n) acc += coeffs[static_cast<std::size_t>(n + 3)] * even_int_pow(z, n);
      return acc;
    };
    OneForm form;
    form.k = [w](double x, double y) { return w(x, y).u; };
    form.g = [w](double x, double y) { return -w(x, y).v; };
    form.singularities = {{0.0, 0.0}};
    if (classify_one_form(form, samples) == FormClass::closed_and_cr) ++analytic_ok;
  }

  OneForm conjugate;
  conjugate.k = [](double x, double) { return x; };
  conjugate.g = [](double, double y) { return y; };
  const FormClass conj_class = classify_one_form(conjugate, samples);

  OneForm shear;
  shear.k = [](double, double y) { return y; };
  shear.g = [](double, double) { return 0.0; };
  const FormClass shear_class = classify_one_form(shear, samples);

  c.passed = analytic_ok == 20 && conj_class == FormClass::closed_only && shear_class == FormClass::not_closed;
  c.detail = std::to_string(analytic_ok) + "/20 power series closed_and_CR; z* " + to_string(conj_class) +
             "; k = y, g = 0 " + to_string(shear_class);
  return c;
}

Criterion contour_invariance() {
  Criterion c{8, "two radii enclosing the same poles agree with each other and with quadrature", false, {}};
  std::mt19937_64 rng(0x5eed0008);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Worst radii;
  Worst oracle;
  int cases = 0;
  for (int attempt = 0; cases < 50 && attempt < 5000; ++attempt) {
    const auto r = random_rational(rng, 4, 3, 8, 0.5);
    const auto poles = find_poles(r.f);
    const EvenElement center = random_point(rng, -2.0, 2.0);
    std::vector<double> dist;
    for (const auto& p : poles) dist.push_back(abs(p.location - center));
    std::sort(dist.begin(), dist.end());
    // Pick a gap of width >= 0.3 after k enclosed poles, k >= 1.
    std::vector<std::pair<double, double>> gaps;
    for (std::size_t k = 0; k < dist.size(); ++k) {
      const double lo = dist[k];
      const double hi = k + 1 < dist.size() ? dist[k + 1] : lo + 1.0;
      if (hi - lo >= 0.3) gaps.emplace_back(lo, hi);
    }
    if (gaps.empty()) continue;
    const auto [lo, hi] = gaps[static_cast<std::size_t>(unit(rng) * static_cast<double>(gaps.size())) % gaps.size()];
    const CircleContour inner{center, lo + 0.25 * (hi - lo)};
    const CircleContour outer{center, lo + 0.75 * (hi - lo)};
    const auto a = integrate_closed(r.f, inner);
    const auto b = integrate_closed(r.f, outer);
    radii.observe(std::abs(a.real_value - b.real_value), 1e-10);
    for (const auto* result : {&a, &b}) {
      const auto& circle = result == &a ? inner : outer;
      const double numeric = factored_circle_integral(r, circle);
      oracle.observe(std::abs(result->real_value - numeric) / (1.0 + std::abs(result->real_value)), 1e-8);
    }
    ++cases;
  }
  c.passed = cases == 50 && radii.failures == 0 && oracle.failures == 0;
  c.detail = std::to_string(cases) + " cases; radius disagreement max " + sci(radii.error) +
             ", oracle max scaled error " + sci(oracle.error);
  return c;
}

Criterion algebra_suite() {
  Criterion c{9, "algebra: basis products, commutation, z z* = rho^2, polar powers", false, {}};
  std::vector<std::string> failures;
  const auto dx = Multivector::dx();
  const auto dy = Multivector::dy();
  const auto dxdy = Multivector::dxdy();
  const auto one = Multivector::scalar(1.0);
  if (!(mv_product(dx, dx) == one)) failures.push_back("dx dx");
  if (!(mv_product(dy, dy) == one)) failures.push_back("dy dy");
  if (!(mv_product(dxdy, dxdy) == Multivector::scalar(-1.0))) failures.push_back("dxdy dxdy");
  if (!(mv_product(dx, dy) == dxdy)) failures.push_back("dx dy");
  if (!(mv_product(dy, dx) == mv_scale(dxdy, -1.0))) failures.push_back("dy dx");
  if (!(mv_product(Multivector::even({2.0, 3.0}), dx) == mv_product(dx, Multivector::even({2.0, -3.0})))) {
    failures.push_back("(2 + 3 dxdy) dx");
  }

  std::mt19937_64 rng(0x5eed0009);
  int commutation_failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const EvenElement e = random_point(rng, -10.0, 10.0);
    const EvenElement ab = random_point(rng, -10.0, 10.0);
    const auto alpha = Multivector::one_form(ab.u, ab.v);
    if (!(mv_product(Multivector::even(e), alpha) == mv_product(alpha, Multivector::even(conj(e))))) {
      ++commutation_failures;
    }
  }
  if (commutation_failures != 0) failures.push_back(std::to_string(commutation_failures) + " commutation cases");

  double conj_err = 0.0;
  double polar_err = 0.0;
  std::uniform_real_distribution<double> log_rho(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> phi_dist(-kPi, kPi);
  for (int i = 0; i < 200; ++i) {
    const double rho = std::exp(log_rho(rng));
    const double phi = phi_dist(rng);
    const EvenElement z{rho * std::cos(phi), rho * std::sin(phi)};
    const EvenElement zz = z * conj(z);
    const double r2 = norm_sq(z);
    conj_err = std::max(conj_err, std::hypot(zz.u - r2, zz.v) / r2);
    const PolarForm pz = to_polar(z);
    for (int m = -8; m <= 8; ++m) {
      const EvenElement direct = even_int_pow(z, m);
      const EvenElement polar = std::pow(pz.rho, m) * EvenElement{std::cos(m * pz.phi), std::sin(m * pz.phi)};
      polar_err = std::max(polar_err, abs(direct - polar) / abs(polar));
    }
  }
  if (!(conj_err <= 1e-14)) failures.push_back("z z* relative error " + sci(conj_err));
  if (!(polar_err <= 1e-12)) failures.push_back("polar power relative error " + sci(polar_err));

  c.passed = failures.empty();
  if (c.passed) {
    c.detail = "basis products exact, 1000 commutations exact, z z* error " + sci(conj_err) +
               ", polar power error " + sci(polar_err);
  } else {
    for (const auto& f : failures) c.detail += (c.detail.empty() ? "" : "; ") + f;
  }
  return c;
}

Criterion laurent_display() {
  Criterion c{10, "Laurent window of sin(z)/z^3 at 0 over [-3, 2]", false, {}};
  const auto s = laurent_expand(contour_function("sin(z)/z^3"), {0.0, 0.0}, -3, 2);
  const double expected[] = {0.0, 1.0, 0.0, -1.0 / 6.0, 0.0, 1.0 / 120.0};
  double worst = 0.0;
  std::string shown;
  for (int n = -3; n <= 2; ++n) {
    const EvenElement a = s.coefficient(n);
    worst = std::max(worst, abs(a - EvenElement{expected[n + 3], 0.0}));
    shown += (n == -3 ? "" : ", ") + format_real(a.u);
  }
  c.passed = worst <= 1e-14;
  c.detail = "(" + shown + "), max error " + sci(worst);
  return c;
}

std::vector<Criterion> run_all() {
  const std::vector<std::pair<int, std::function<Criterion()>>> all = {
      {1, line_integral_lorentzian}, {2, line_integral_double_pole}, {3, line_integral_fourier},
      {4, imaginary_contour},        {5, angular_identity},          {6, residue_cross_check},
      {7, form_classification},      {8, contour_invariance},        {9, algebra_suite},
      {10, laurent_display},
  };
  std::vector<Criterion> out;
  for (const auto& [id, run] : all) {
    try {
      out.push_back(run());
    } catch (const std::exception& e) {
      out.push_back({id, "criterion " + std::to_string(id), false, std::string("threw: ") + e.what()});
    }
  }
  return out;
}

std::string format_line(const Criterion& c) {
  return std::string(c.passed ? "PASS" : "FAIL") + (c.id < 10 ? "   " : "  ") + std::to_string(c.id) + "  " +
         c.name + ": " + c.detail;
}

}  // namespace kahler::acceptance
