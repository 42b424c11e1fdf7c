#include "kahler/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "kahler/errors.hpp"
#include "kahler/series.hpp"

namespace kahler {

Expr Expr::number(double v) {
  Expr e;
  e.kind = Kind::number;
  e.value = v;
  return e;
}

Expr Expr::unit() {
  Expr e;
  e.kind = Kind::unit;
  return e;
}

Expr Expr::symbol(std::string name) {
  Expr e;
  e.kind = Kind::symbol;
  e.name = std::move(name);
  return e;
}

Expr Expr::binary(Kind k, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = k;
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  return e;
}

Expr Expr::negate(Expr inner) {
  Expr e;
  e.kind = Kind::neg;
  e.children.push_back(std::move(inner));
  return e;
}

Expr Expr::power(Expr base, int exponent) {
  Expr e;
  e.kind = Kind::pow;
  e.exponent = exponent;
  e.children.push_back(std::move(base));
  return e;
}

Expr Expr::call(std::string fn, Expr arg) {
  Expr e;
  e.kind = Kind::call;
  e.name = std::move(fn);
  e.children.push_back(std::move(arg));
  return e;
}

bool Expr::depends_on(const std::string& sym) const {
  if (kind == Kind::symbol) return name == sym;
  for (const auto& c : children) {
    if (c.depends_on(sym)) return true;
  }
  return false;
}

namespace {

class Parser {
public:
  Parser(const std::string& text, const ParseOptions& opts) : text_(text), opts_(opts) {}

  Expr run() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Expr e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + c + "' before end of input", pos_);
      throw ParseError(std::string("expected '") + c + "' but found '" + text_[pos_] + "'", pos_);
    }
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(Expr::Kind::add, std::move(lhs), parse_term());
      } else if (accept('-')) {
        lhs = Expr::binary(Expr::Kind::sub, std::move(lhs), parse_term());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(Expr::Kind::mul, std::move(lhs), parse_unary());
      } else if (accept('/')) {
        lhs = Expr::binary(Expr::Kind::div, std::move(lhs), parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    if (accept('-')) return Expr::negate(parse_unary());
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    const Expr exponent = parse_unary();
    for (const char* sym : {"z", "x", "y"}) {
      if (exponent.depends_on(sym)) {
        throw ParseError("symbolic exponent: only integer constant powers are supported", at);
      }
    }
    const EvenElement folded = evaluate(exponent, {});
    double whole = 0.0;
    if (folded.v != 0.0 || std::modf(folded.u, &whole) != 0.0) {
      throw ParseError("fractional power " + format_real(folded.u) +
                           ": only integer powers are periodic over a circle",
                       at);
    }
    if (std::abs(whole) > 4096.0) throw ParseError("exponent too large", at);
    return Expr::power(std::move(base), static_cast<int>(whole));
  }

  Expr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = parse_expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_name();
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
      if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
        pos_ = look;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    double v = 0.0;
    const auto [end, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc{} || end != text_.data() + pos_) throw ParseError("malformed number", start);
    return Expr::number(v);
  }

  Expr parse_name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name = text_.substr(start, pos_ - start);

    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      if (name != "exp" && name != "sin" && name != "cos") {
        throw ParseError("unknown function '" + name + "' (supported: exp, sin, cos)", start);
      }
      ++pos_;
      Expr arg = parse_expr();
      expect(')');
      return Expr::call(name, std::move(arg));
    }

    if (auto it = opts_.bindings.find(name); it != opts_.bindings.end()) return Expr::number(it->second);
    if (name == "I") return Expr::unit();
    if (name == "pi") return Expr::number(std::numbers::pi);
    if (name == "z") return Expr::symbol("z");
    if (name == "x") {
      switch (opts_.mode) {
        case ParseMode::real_line: return Expr::symbol("z");
        case ParseMode::plane: return Expr::symbol("x");
        case ParseMode::contour:
          throw ParseError("'x' is only accepted for real-line integrands; write the integrand in z", start);
      }
    }
    if (name == "y") {
      if (opts_.mode == ParseMode::plane) return Expr::symbol("y");
      throw ParseError("'y' is only accepted in plane expressions", start);
    }
    throw ParseError("unknown symbol '" + name + "'", start);
  }

  const std::string& text_;
  const ParseOptions& opts_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(const std::string& text, const ParseOptions& opts) { return Parser(text, opts).run(); }

std::string to_prefix(const Expr& e) {
  using K = Expr::Kind;
  auto bin = [&](const char* op) {
    return std::string("(") + op + " " + to_prefix(e.children[0]) + " " + to_prefix(e.children[1]) + ")";
  };
  switch (e.kind) {
    case K::number: return format_real(e.value);
    case K::unit: return "I";
    case K::symbol: return e.name;
    case K::add: return bin("+");
    case K::sub: return bin("-");
    case K::mul: return bin("*");
    case K::div: return bin("/");
    case K::neg: return "(neg " + to_prefix(e.children[0]) + ")";
    case K::pow: return "(^ " + to_prefix(e.children[0]) + " " + std::to_string(e.exponent) + ")";
    case K::call: return "(" + e.name + " " + to_prefix(e.children[0]) + ")";
  }
  return "?";
}

EvenElement evaluate(const Expr& e, const Environment& env) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::number: return {e.value, 0.0};
    case K::unit: return EvenElement::unit();
    case K::symbol:
      if (e.name == "x") return {env.x, 0.0};
      if (e.name == "y") return {env.y, 0.0};
      return env.z;
    case K::add: return evaluate(e.children[0], env) + evaluate(e.children[1], env);
    case K::sub: return evaluate(e.children[0], env) - evaluate(e.children[1], env);
    case K::mul: return evaluate(e.children[0], env) * evaluate(e.children[1], env);
    case K::div: return evaluate(e.children[0], env) / evaluate(e.children[1], env);
    case K::neg: return -evaluate(e.children[0], env);
    case K::pow: return even_int_pow(evaluate(e.children[0], env), e.exponent);
    case K::call:
      return entire_value(entire_kind_from_string(e.name), {1.0, 0.0}, evaluate(e.children[0], env));
  }
  return {};
}

}  // namespace kahler
