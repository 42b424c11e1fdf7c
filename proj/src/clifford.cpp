#include "kahler/clifford.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "kahler/errors.hpp"

namespace kahler {

Multivector mv_product(const Multivector& l, const Multivector& r) {
  // dx dxdy = dy, dxdy dx = -dy, dy dxdy = -dx, dxdy dy = dx.
  return {
      l.s * r.s + l.a * r.a + l.b * r.b - l.p * r.p,
      l.s * r.a + l.a * r.s - l.b * r.p + l.p * r.b,
      l.s * r.b + l.b * r.s + l.a * r.p - l.p * r.a,
      l.s * r.p + l.p * r.s + l.a * r.b - l.b * r.a,
  };
}

Multivector mv_add(const Multivector& l, const Multivector& r) {
  return {l.s + r.s, l.a + r.a, l.b + r.b, l.p + r.p};
}

Multivector mv_scale(const Multivector& m, double f) {
  return {f * m.s, f * m.a, f * m.b, f * m.p};
}

double dot_one_forms(const Multivector& alpha, const Multivector& beta) {
  if (!alpha.is_one_form() || !beta.is_one_form()) {
    throw std::invalid_argument("dot_one_forms: arguments must be grade-1");
  }
  const Multivector sym = mv_add(mv_product(alpha, beta), mv_product(beta, alpha));
  return 0.5 * sym.s;
}

EvenElement even_inv(EvenElement a) {
  const double n = norm_sq(a);
  if (n == 0.0) {
    throw DivisionByZero("inverse of the zero even element");
  }
  return {a.u / n, -a.v / n};
}

EvenElement even_div(EvenElement a, EvenElement b) {
  if (b.is_zero()) {
    throw DivisionByZero("division by the zero even element");
  }
  // Scaled form avoids overflow in norm_sq for large |b|.
  const double s = std::max(std::abs(b.u), std::abs(b.v));
  const EvenElement bs{b.u / s, b.v / s};
  const double n = norm_sq(bs);
  const EvenElement num = even_mul(a, conj(bs));
  return {num.u / (n * s), num.v / (n * s)};
}

EvenElement even_int_pow(EvenElement a, int m) {
  if (m < 0) {
    if (a.is_zero()) {
      throw DivisionByZero("negative power of the zero even element");
    }
    // -m overflows for INT_MIN; no caller needs exponents that large.
    return even_inv(even_int_pow(a, -m));
  }
  EvenElement result{1.0, 0.0};
  EvenElement base = a;
  unsigned e = static_cast<unsigned>(m);
  while (e != 0) {
    if (e & 1u) result = even_mul(result, base);
    e >>= 1u;
    if (e != 0) base = even_mul(base, base);
  }
  return result;
}

PolarForm to_polar(EvenElement e) {
  if (e.is_zero()) {
    throw std::domain_error("the zero element has no polar form");
  }
  double phi = std::atan2(e.v, e.u);
  if (phi == -std::numbers::pi) phi = std::numbers::pi;
  return {std::hypot(e.u, e.v), phi};
}

EvenElement from_polar(const PolarForm& p) {
  return {p.rho * std::cos(p.phi), p.rho * std::sin(p.phi)};
}

Multivector dphi_form(EvenElement z) {
  return mv_product(Multivector::even(even_inv(z)), Multivector::dy());
}

Multivector drho_form(EvenElement z) {
  return mv_product(Multivector::even(abs(z) * even_inv(z)), Multivector::dx());
}

double angular_coefficient(const Multivector& alpha, EvenElement z) {
  return norm_sq(z) * dot_one_forms(alpha, dphi_form(z));
}

std::string format_real(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) return "nan";
  return {buf, end};
}

std::string to_string(EvenElement e) {
  if (std::signbit(e.v) && !std::isnan(e.v)) {
    return format_real(e.u) + " - " + format_real(-e.v) + "·dxdy";
  }
  return format_real(e.u) + " + " + format_real(e.v) + "·dxdy";
}

std::ostream& operator<<(std::ostream& os, EvenElement e) { return os << to_string(e); }

std::ostream& operator<<(std::ostream& os, const Multivector& m) {
  return os << format_real(m.s) << " + " << format_real(m.a) << "·dx + " << format_real(m.b)
            << "·dy + " << format_real(m.p) << "·dxdy";
}

}  // namespace kahler
