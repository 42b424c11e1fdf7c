#include "kahler/meromorphic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "kahler/errors.hpp"

namespace kahler {

namespace {

// Number of leading Taylor coefficients of p at c that vanish relative to
// their magnitude scale, capped at limit.
int vanishing_order(const Polynomial& p, EvenElement c, int limit, double tol) {
  if (p.is_zero()) return limit;
  const auto t = p.taylor_at(c);
  std::vector<EvenElement> mags;
  for (const auto& e : p.coeffs()) mags.emplace_back(abs(e), 0.0);
  const auto scale = Polynomial(std::move(mags)).taylor_at({abs(c), 0.0});
  int k = 0;
  while (k < limit && k < static_cast<int>(t.size()) &&
         abs(t[static_cast<std::size_t>(k)]) <= tol * scale[static_cast<std::size_t>(k)].u) {
    ++k;
  }
  return k;
}

bool same_factor(const EntireFactor& a, const EntireFactor& b) { return a.kind == b.kind && a.scale == b.scale; }

std::string describe_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const EvenElement c = p.coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    if (k == 1) os << "·z";
    if (k > 1) os << "·z^" << k;
  }
  return os.str();
}

}  // namespace

MeromorphicFunction::MeromorphicFunction(Polynomial num, Polynomial den, std::optional<EntireFactor> factor,
                                         const NormalizeOptions& opts)
    : num_(std::move(num)), den_(std::move(den)), factor_(factor) {
  if (den_.is_zero()) throw DivisionByZero("denominator is identically zero");
  if (num_.is_zero()) {
    den_ = Polynomial(EvenElement{1.0});
    factor_.reset();
    return;
  }
  if (factor_ && factor_->scale.is_zero()) {
    const EvenElement at_zero = entire_value(factor_->kind, {}, {});
    num_ = at_zero * num_;
    factor_.reset();
    if (num_.is_zero()) {
      den_ = Polynomial(EvenElement{1.0});
      return;
    }
  }

  if (den_.degree() >= 1) {
    for (const auto& root : find_roots(den_, opts.roots)) {
      const int shared = vanishing_order(num_, root.location, root.multiplicity, opts.cancel_tolerance);
      for (int k = 0; k < shared; ++k) {
        num_ = num_.deflate(root.location);
        den_ = den_.deflate(root.location);
      }
      if (root.multiplicity > shared) den_roots_.push_back({root.location, root.multiplicity - shared});
    }
  }

  const EvenElement inv_lead = even_inv(den_.leading());
  num_ = inv_lead * num_;
  auto dc = (inv_lead * den_).coeffs();
  dc.back() = {1.0, 0.0};
  den_ = Polynomial(std::move(dc));
}

EvenElement MeromorphicFunction::factor_value(EvenElement z) const {
  return factor_ ? entire_value(factor_->kind, factor_->scale, z) : EvenElement{1.0, 0.0};
}

EvenElement MeromorphicFunction::operator()(EvenElement z) const {
  const EvenElement d = den_(z);
  if (d.is_zero()) throw DivisionByZero("evaluation at a root of the denominator");
  return num_(z) / d * factor_value(z);
}

std::string MeromorphicFunction::describe() const {
  std::string s = "[" + describe_poly(num_) + "] / [" + describe_poly(den_) + "]";
  if (factor_) s += " * " + to_string(factor_->kind) + "((" + to_string(factor_->scale) + ")·z)";
  return s;
}

namespace {

struct Partial {
  Polynomial num{EvenElement{0.0}};
  Polynomial den{EvenElement{1.0}};
  std::optional<EntireFactor> factor;

  bool is_zero() const { return num.is_zero(); }
};

Partial constant(EvenElement c) { return {Polynomial(c), Polynomial(EvenElement{1.0}), std::nullopt}; }

Partial add(Partial a, Partial b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.factor.has_value() != b.factor.has_value() ||
      (a.factor && !same_factor(*a.factor, *b.factor))) {
    throw Unsupported("sums involving different entire factors are not meromorphic of the supported form "
                      "(rational times at most one exp/sin/cos)");
  }
  return {a.num * b.den + b.num * a.den, a.den * b.den, a.factor};
}

Partial negate(Partial a) {
  a.num = -a.num;
  return a;
}

Partial multiply(Partial a, Partial b) {
  if (a.is_zero() || b.is_zero()) return constant({});
  std::optional<EntireFactor> f = a.factor ? a.factor : b.factor;
  if (a.factor && b.factor) {
    if (a.factor->kind != EntireKind::exp || b.factor->kind != EntireKind::exp) {
      throw Unsupported("products of entire factors other than exp·exp are not supported");
    }
    f = EntireFactor{EntireKind::exp, a.factor->scale + b.factor->scale};
  }
  return {a.num * b.num, a.den * b.den, f};
}

Partial reciprocal(Partial a) {
  if (a.is_zero()) throw DivisionByZero("division by an expression that is identically zero");
  std::optional<EntireFactor> f;
  if (a.factor) {
    if (a.factor->kind != EntireKind::exp) {
      throw Unsupported("entire factor " + to_string(a.factor->kind) +
                        " in a denominator: its zeros would be poles outside the rational part");
    }
    f = EntireFactor{EntireKind::exp, -a.factor->scale};
  }
  return {a.den, a.num, f};
}

Partial power(Partial base, int n) {
  if (n < 0) return power(reciprocal(std::move(base)), -n);
  if (n == 0) return constant({1.0, 0.0});
  std::optional<EntireFactor> f;
  if (base.factor) {
    if (base.factor->kind == EntireKind::exp) {
      f = EntireFactor{EntireKind::exp, static_cast<double>(n) * base.factor->scale};
    } else if (n == 1) {
      f = base.factor;
    } else {
      throw Unsupported("powers of " + to_string(base.factor->kind) + " are not supported");
    }
  }
  const auto un = static_cast<unsigned>(n);
  return {base.num.pow(un), base.den.pow(un), f};
}

Partial call(EntireKind kind, const Partial& arg) {
  if (arg.factor || arg.den.degree() != 0 || arg.num.degree() > 1 ||
      (arg.num.degree() == 1 && !arg.num.coeff(0).is_zero())) {
    throw Unsupported("argument of " + to_string(kind) + " must have the form c·z");
  }
  const EvenElement d = arg.den.coeff(0);
  if (arg.num.degree() <= 0) {
    return constant(entire_value(kind, {1.0, 0.0}, arg.num.coeff(0) / d));
  }
  const EvenElement scale = arg.num.coeff(1) / d;
  return {Polynomial(EvenElement{1.0}), Polynomial(EvenElement{1.0}), EntireFactor{kind, scale}};
}

Partial build(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::number: return constant({e.value, 0.0});
    case K::unit: return constant(EvenElement::unit());
    case K::symbol:
      if (e.name != "z") throw Unsupported("symbol '" + e.name + "' cannot appear in a function of z");
      return {Polynomial::identity(), Polynomial(EvenElement{1.0}), std::nullopt};
    case K::add: return add(build(e.children[0]), build(e.children[1]));
    case K::sub: return add(build(e.children[0]), negate(build(e.children[1])));
    case K::mul: return multiply(build(e.children[0]), build(e.children[1]));
    case K::div: return multiply(build(e.children[0]), reciprocal(build(e.children[1])));
    case K::neg: return negate(build(e.children[0]));
    case K::pow: return power(build(e.children[0]), e.exponent);
    case K::call: return call(entire_kind_from_string(e.name), build(e.children[0]));
  }
  throw Unsupported("unsupported expression");
}

}  // namespace

MeromorphicFunction to_meromorphic(const Expr& e, const NormalizeOptions& opts) {
  Partial p = build(e);
  return MeromorphicFunction(std::move(p.num), std::move(p.den), p.factor, opts);
}

std::vector<Pole> find_poles(const MeromorphicFunction& f) {
  std::vector<Pole> poles;
  for (const auto& root : f.den_roots()) {
    int order = root.multiplicity;
    if (f.factor()) {
      const auto e = entire_series(f.factor()->kind, f.factor()->scale, root.location, root.multiplicity);
      order -= std::min(e.valuation(), root.multiplicity);
    }
    if (order >= 1) poles.push_back({root.location, order, root.multiplicity});
  }
  std::sort(poles.begin(), poles.end(), [](const Pole& a, const Pole& b) {
    if (a.location.v != b.location.v) return a.location.v > b.location.v;
    return a.location.u < b.location.u;
  });
  return poles;
}

LaurentSeries local_expansion(const MeromorphicFunction& f, EvenElement center, int window, double snap) {
  if (window < 1) throw std::invalid_argument("local_expansion: window must be at least 1");
  const int t = f.num().degree() + f.den().degree() + window + 2;
  auto den = LaurentSeries::from_polynomial(Polynomial(EvenElement{1.0}), center, t, snap);
  for (const auto& root : f.den_roots()) {
    const auto linear = LaurentSeries::from_polynomial(Polynomial({-root.location, EvenElement{1.0}}), center, t, snap);
    for (int k = 0; k < root.multiplicity; ++k) den = series_mul(den, linear, snap);
  }
  auto product = series_mul(LaurentSeries::from_polynomial(f.num(), center, t, snap), series_inv(den, snap), snap);
  if (f.factor()) {
    product = series_mul(product, entire_series(f.factor()->kind, f.factor()->scale, center, t, snap), snap);
  }
  if (product.is_zero()) return LaurentSeries::zero(center, window - 1);
  return product.truncated(product.valuation() + window - 1);
}

}  // namespace kahler
