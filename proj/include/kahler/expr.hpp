#pragma once

/**
 * @file expr.hpp
 * @brief Expression grammar for integrands.
 *
 *     expr    := term (('+' | '-') term)*
 *     term    := unary (('*' | '/') unary)*
 *     unary   := ('+' | '-') unary | power
 *     power   := primary ('^' unary)?          right associative
 *     primary := number | name | name '(' expr ')' | '(' expr ')'
 *
 * Names: z, I (the 2-form dxdy), pi, bound parameters, and the calls exp, sin
 * and cos. In real-line mode x stands for z; in plane mode x and y are real
 * coordinates. Exponents must fold to integer constants: fractional powers are
 * not periodic on a circle and are rejected.
 */

#include <map>
#include <string>
#include <vector>

#include "kahler/clifford.hpp"

namespace kahler {

enum class ParseMode {
  contour,    ///< z and I; x is rejected
  real_line,  ///< x is rewritten to z
  plane,      ///< x and y are real variables
};

struct ParseOptions {
  ParseMode mode = ParseMode::contour;
  std::map<std::string, double> bindings;
};

struct Expr {
  enum class Kind { number, unit, symbol, add, sub, mul, div, neg, pow, call };

  Kind kind = Kind::number;
  double value = 0.0;  // number
  int exponent = 0;    // pow
  std::string name;    // symbol ("z", "x", "y") or call ("exp", "sin", "cos")
  std::vector<Expr> children;

  static Expr number(double v);
  static Expr unit();
  static Expr symbol(std::string name);
  static Expr binary(Kind k, Expr lhs, Expr rhs);
  static Expr negate(Expr e);
  static Expr power(Expr base, int exponent);
  static Expr call(std::string fn, Expr arg);

  bool depends_on(const std::string& symbol) const;
};

/// Throws ParseError (with a 0-based character position) on malformed input.
Expr parse(const std::string& text, const ParseOptions& opts = {});

/// Prefix rendering, e.g. "(/ 1 (^ (+ (^ z 2) 1) 2))".
std::string to_prefix(const Expr& e);

/// Values for the symbols an expression may reference.
struct Environment {
  EvenElement z;
  double x = 0.0;
  double y = 0.0;
};

/// Direct evaluation in the even subalgebra. Throws DivisionByZero.
EvenElement evaluate(const Expr& e, const Environment& env);

}  // namespace kahler
