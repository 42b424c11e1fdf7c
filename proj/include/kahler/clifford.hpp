#pragma once

/**
 * @file clifford.hpp
 * @brief Kähler (Clifford) algebra of differential forms in the real plane.
 *
 * The algebra is spanned by {1, dx, dy, dxdy} with
 *
 *     dx dx = dy dy = 1,   dx dy = -dy dx,   (dxdy)^2 = -1.
 *
 * Its even part {u + v dxdy} is commutative and plays the role usually given
 * to the complex numbers: z = x + y dxdy, z* = x - y dxdy, z z* = rho^2.
 * Products with an even element commute past a 1-form only after
 * conjugation: (u + v dxdy) alpha = alpha (u - v dxdy).
 */

#include <cmath>
#include <complex>
#include <iosfwd>
#include <string>

namespace kahler {

/// u + v dxdy.
struct EvenElement {
  double u = 0.0;
  double v = 0.0;

  constexpr EvenElement() = default;
  constexpr EvenElement(double u_, double v_ = 0.0) : u(u_), v(v_) {}

  static constexpr EvenElement unit() { return {0.0, 1.0}; }

  constexpr bool is_zero() const { return u == 0.0 && v == 0.0; }

  friend constexpr bool operator==(const EvenElement&, const EvenElement&) = default;
};

/// s + a dx + b dy + p dxdy.
struct Multivector {
  double s = 0.0;
  double a = 0.0;
  double b = 0.0;
  double p = 0.0;

  static constexpr Multivector scalar(double s) { return {s, 0.0, 0.0, 0.0}; }
  static constexpr Multivector dx() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Multivector dy() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Multivector dxdy() { return {0.0, 0.0, 0.0, 1.0}; }
  static constexpr Multivector one_form(double a, double b) { return {0.0, a, b, 0.0}; }
  static constexpr Multivector even(EvenElement e) { return {e.u, 0.0, 0.0, e.v}; }

  constexpr bool is_one_form() const { return s == 0.0 && p == 0.0; }
  constexpr bool is_even() const { return a == 0.0 && b == 0.0; }
  constexpr EvenElement even_part() const { return {s, p}; }

  friend constexpr bool operator==(const Multivector&, const Multivector&) = default;
};

/// Polar decomposition rho (cos phi + dxdy sin phi), phi in (-pi, pi].
struct PolarForm {
  double rho = 0.0;
  double phi = 0.0;
};

// --- full algebra -----------------------------------------------------------

Multivector mv_product(const Multivector& lhs, const Multivector& rhs);
Multivector mv_add(const Multivector& lhs, const Multivector& rhs);
Multivector mv_scale(const Multivector& m, double factor);

/// Symmetrized product (alpha beta + beta alpha) / 2 of two 1-forms.
/// Throws std::invalid_argument when either input has a scalar or dxdy part.
double dot_one_forms(const Multivector& alpha, const Multivector& beta);

// --- even subalgebra --------------------------------------------------------

constexpr EvenElement conj(EvenElement e) { return {e.u, -e.v}; }
constexpr double norm_sq(EvenElement e) { return e.u * e.u + e.v * e.v; }
inline double abs(EvenElement e) { return std::hypot(e.u, e.v); }

constexpr EvenElement even_add(EvenElement a, EvenElement b) { return {a.u + b.u, a.v + b.v}; }
constexpr EvenElement even_sub(EvenElement a, EvenElement b) { return {a.u - b.u, a.v - b.v}; }
constexpr EvenElement even_mul(EvenElement a, EvenElement b) {
  return {a.u * b.u - a.v * b.v, a.u * b.v + a.v * b.u};
}

/// conj(a) / norm_sq(a); throws DivisionByZero for the zero element.
EvenElement even_inv(EvenElement a);
EvenElement even_div(EvenElement a, EvenElement b);

/// Integer power by repeated squaring; negative powers go through even_inv.
EvenElement even_int_pow(EvenElement a, int m);

constexpr EvenElement operator+(EvenElement a, EvenElement b) { return even_add(a, b); }
constexpr EvenElement operator-(EvenElement a, EvenElement b) { return even_sub(a, b); }
constexpr EvenElement operator-(EvenElement a) { return {-a.u, -a.v}; }
constexpr EvenElement operator*(EvenElement a, EvenElement b) { return even_mul(a, b); }
constexpr EvenElement operator*(double s, EvenElement a) { return {s * a.u, s * a.v}; }
constexpr EvenElement operator*(EvenElement a, double s) { return {s * a.u, s * a.v}; }
inline EvenElement operator/(EvenElement a, EvenElement b) { return even_div(a, b); }
inline EvenElement operator/(EvenElement a, double s) { return {a.u / s, a.v / s}; }
inline EvenElement& operator+=(EvenElement& a, EvenElement b) { return a = a + b; }
inline EvenElement& operator-=(EvenElement& a, EvenElement b) { return a = a - b; }
inline EvenElement& operator*=(EvenElement& a, EvenElement b) { return a = a * b; }

/// Throws std::domain_error for the zero element.
PolarForm to_polar(EvenElement e);
EvenElement from_polar(const PolarForm& p);

// Transcendental functions on the even subalgebra. The even subalgebra is
// isomorphic to C with dxdy -> i, so std::complex does the work.
inline std::complex<double> to_complex(EvenElement e) { return {e.u, e.v}; }
inline EvenElement from_complex(std::complex<double> c) { return {c.real(), c.imag()}; }
inline EvenElement even_exp(EvenElement e) { return from_complex(std::exp(to_complex(e))); }
inline EvenElement even_sin(EvenElement e) { return from_complex(std::sin(to_complex(e))); }
inline EvenElement even_cos(EvenElement e) { return from_complex(std::cos(to_complex(e))); }

// --- polar relations --------------------------------------------------------

/// d(phi) at the point z, computed as (1/z) dy.
Multivector dphi_form(EvenElement z);
/// d(rho) at the point z, computed as (rho/z) dx.
Multivector drho_form(EvenElement z);

/// Angular coefficient j of a 1-form alpha in alpha = h drho + j dphi,
/// evaluated at z as rho^2 (alpha . dphi).
double angular_coefficient(const Multivector& alpha, EvenElement z);

/// Renders "u + v·dxdy" (or "u - |v|·dxdy").
std::string to_string(EvenElement e);
std::ostream& operator<<(std::ostream& os, EvenElement e);
std::ostream& operator<<(std::ostream& os, const Multivector& m);

/// Shortest decimal representation that round-trips to the same double.
std::string format_real(double x);

}  // namespace kahler
