#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kahler/expr.hpp"
#include "kahler/polynomial.hpp"
#include "kahler/series.hpp"

namespace kahler {

/// kind(scale * z).
struct EntireFactor {
  EntireKind kind = EntireKind::exp;
  EvenElement scale{1.0, 0.0};
};

struct NormalizeOptions {
  RootFinderOptions roots;
  /// A denominator root r is shared with the numerator when the numerator's
  /// Taylor coefficients at r vanish to this fraction of their scale.
  double cancel_tolerance = 1e-9;
};

/// num / den * factor, with den monic and no root shared by num and den.
class MeromorphicFunction {
public:
  MeromorphicFunction() = default;
  /// Normalizes: cancels shared roots, makes den monic. Throws
  /// DivisionByZero for a zero denominator.
  MeromorphicFunction(Polynomial num, Polynomial den, std::optional<EntireFactor> factor = std::nullopt,
                      const NormalizeOptions& opts = {});

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const std::optional<EntireFactor>& factor() const { return factor_; }
  /// Roots of den with multiplicities, found once during normalization.
  const std::vector<RootCluster>& den_roots() const { return den_roots_; }

  /// Direct evaluation. Throws DivisionByZero at a root of den.
  EvenElement operator()(EvenElement z) const;
  EvenElement factor_value(EvenElement z) const;

  std::string describe() const;

private:
  Polynomial num_{EvenElement{0.0}};
  Polynomial den_{EvenElement{1.0}};
  std::optional<EntireFactor> factor_;
  std::vector<RootCluster> den_roots_;
};

struct Pole {
  EvenElement location;
  int order = 1;
  /// Multiplicity of location as a root of den; exceeds order when a zero of
  /// the entire factor absorbs part of it.
  int den_multiplicity = 1;
};

/// Rational structure with at most one entire factor. Throws Unsupported for
/// other shapes and DivisionByZero for literal division by zero.
MeromorphicFunction to_meromorphic(const Expr& e, const NormalizeOptions& opts = {});

/// Poles sorted by descending v, then ascending u.
std::vector<Pole> find_poles(const MeromorphicFunction& f);

/// Laurent expansion with `window` coefficients starting at the valuation.
/// The denominator is expanded from its factored form prod (z - r_i)^{m_i},
/// which stays accurate next to clustered multiple poles where the expanded
/// coefficients lose digits. Throws std::invalid_argument when window < 1.
LaurentSeries local_expansion(const MeromorphicFunction& f, EvenElement center, int window = kDefaultWindow,
                              double snap = kDefaultSnap);

}  // namespace kahler
