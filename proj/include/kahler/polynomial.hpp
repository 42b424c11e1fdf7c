#pragma once

#include <span>
#include <vector>

#include "kahler/clifford.hpp"

namespace kahler {

/// Polynomial in z with even-element coefficients, ascending order.
/// The zero polynomial has no coefficients; otherwise the top coefficient is
/// nonzero.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<EvenElement> coeffs);
  Polynomial(EvenElement constant);

  /// The monomial z.
  static Polynomial identity();
  /// prod (z - r) over the given roots, monic.
  static Polynomial from_roots(std::span<const EvenElement> roots);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<EvenElement>& coeffs() const { return coeffs_; }
  EvenElement coeff(int k) const;
  EvenElement leading() const;

  EvenElement operator()(EvenElement z) const;
  /// sum |c_k| |z|^k, the magnitude scale of an evaluation at z.
  double eval_scale(EvenElement z) const;
  double max_abs_coeff() const;

  Polynomial derivative() const;

  /// Coefficients t_k of p(center + s) = sum t_k s^k, k = 0..degree.
  std::vector<EvenElement> taylor_at(EvenElement center) const;

  /// Quotient of division by (z - r); the remainder is discarded.
  Polynomial deflate(EvenElement r) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(EvenElement s, const Polynomial& p);

  Polynomial pow(unsigned n) const;

private:
  void trim();
  std::vector<EvenElement> coeffs_;
};

/// A root with its multiplicity after clustering.
struct RootCluster {
  EvenElement location;
  int multiplicity = 1;
};

struct RootFinderOptions {
  int max_iterations = 2000;
  /// Relative tolerance on normalized Taylor coefficients when deciding
  /// whether a group of approximate roots is one multiple root.
  double cluster_tolerance = 1e-9;
};

/// Aberth–Ehrlich simultaneous iteration. Returns degree() approximations.
/// Throws RootFinderFailure when the iteration does not settle.
std::vector<EvenElement> aberth_roots(const Polynomial& p, const RootFinderOptions& opts = {});

/// Groups approximate roots into multiple roots. The centroid of a candidate
/// group of m nearest approximations is polished by Newton steps on the
/// (m-1)-th derivative, and the group is accepted when the first m Taylor
/// coefficients of p there vanish to the cluster tolerance. The largest
/// accepted group wins.
std::vector<RootCluster> cluster_roots(const Polynomial& p, std::span<const EvenElement> approx,
                                       const RootFinderOptions& opts = {});

/// aberth_roots followed by cluster_roots.
std::vector<RootCluster> find_roots(const Polynomial& p, const RootFinderOptions& opts = {});

}  // namespace kahler
