#include "kahler/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "kahler/errors.hpp"

namespace kahler {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct ValueAndSlope {
  EvenElement value;
  EvenElement slope;
};

ValueAndSlope horner2(const std::vector<EvenElement>& c, EvenElement z) {
  EvenElement p{};
  EvenElement dp{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

// Taylor coefficients of the magnitude polynomial sum |a_k| x^k at x = r:
// the natural scale of the j-th Taylor coefficient of p at a point of
// modulus r.
std::vector<double> taylor_scales(const Polynomial& p, double r) {
  std::vector<EvenElement> mags;
  mags.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) mags.emplace_back(abs(c), 0.0);
  const auto t = Polynomial(std::move(mags)).taylor_at({r, 0.0});
  std::vector<double> out;
  out.reserve(t.size());
  for (const auto& e : t) out.push_back(e.u);
  return out;
}

}  // namespace

Polynomial::Polynomial(std::vector<EvenElement> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(EvenElement constant) : coeffs_{constant} { trim(); }

Polynomial Polynomial::identity() { return Polynomial({EvenElement{}, EvenElement{1.0}}); }

Polynomial Polynomial::from_roots(std::span<const EvenElement> roots) {
  Polynomial p(EvenElement{1.0});
  for (const auto& r : roots) p = p * Polynomial({-r, EvenElement{1.0}});
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

EvenElement Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

EvenElement Polynomial::leading() const { return coeffs_.empty() ? EvenElement{} : coeffs_.back(); }

EvenElement Polynomial::operator()(EvenElement z) const {
  EvenElement acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double Polynomial::eval_scale(EvenElement z) const {
  const double r = abs(z);
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + abs(*it);
  return acc;
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, abs(c));
  return m;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<EvenElement> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

std::vector<EvenElement> Polynomial::taylor_at(EvenElement center) const {
  std::vector<EvenElement> t = coeffs_;
  const std::size_t n = t.size();
  // Repeated synthetic division by (z - center).
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = n - 1; i > k; --i) t[i - 1] += center * t[i];
  }
  return t;
}

Polynomial Polynomial::deflate(EvenElement r) const {
  if (coeffs_.size() <= 1) return {};
  std::vector<EvenElement> q(coeffs_.size() - 1);
  EvenElement carry{};
  for (std::size_t i = coeffs_.size() - 1; i > 0; --i) {
    carry = carry * r + coeffs_[i];
    q[i - 1] = carry;
  }
  return Polynomial(std::move(q));
}

Polynomial Polynomial::operator-() const {
  std::vector<EvenElement> c = coeffs_;
  for (auto& e : c) e = -e;
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<EvenElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  }
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<EvenElement> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(EvenElement s, const Polynomial& p) {
  std::vector<EvenElement> c = p.coeffs_;
  for (auto& e : c) e = s * e;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(EvenElement{1.0});
  Polynomial base = *this;
  while (n != 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n != 0) base = base * base;
  }
  return result;
}

std::vector<EvenElement> aberth_roots(const Polynomial& p, const RootFinderOptions& opts) {
  const int n = p.degree();
  if (n <= 0) return {};
  const auto& c = p.coeffs();
  if (n == 1) return {-c[0] / c[1]};

  // Start on a circle around the root centroid.
  const EvenElement centroid = -c[static_cast<std::size_t>(n - 1)] / (static_cast<double>(n) * c.back());
  const auto shifted = p.taylor_at(centroid);
  double radius = 0.0;
  for (int k = 0; k < n; ++k) {
    const double ratio = abs(shifted[static_cast<std::size_t>(k)]) / abs(shifted.back());
    if (ratio > 0.0) radius = std::max(radius, std::pow(ratio, 1.0 / (n - k)));
  }
  if (radius == 0.0) return std::vector<EvenElement>(static_cast<std::size_t>(n), centroid);

  std::vector<EvenElement> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    z[static_cast<std::size_t>(k)] = centroid + from_polar({radius, angle});
  }

  std::vector<bool> done(z.size(), false);
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (done[i]) continue;
      const auto [value, slope] = horner2(c, z[i]);
      if (abs(value) <= 4.0 * n * kEps * p.eval_scale(z[i])) {
        done[i] = true;
        continue;
      }
      all_done = false;
      EvenElement repulsion{};
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j == i) continue;
        const EvenElement diff = z[i] - z[j];
        if (!diff.is_zero()) repulsion += even_inv(diff);
      }
      if (slope.is_zero()) {
        // Nudge off a critical point.
        z[i] += EvenElement{kEps * (1.0 + abs(z[i])), kEps * (1.0 + abs(z[i]))} * 1e3;
        continue;
      }
      const EvenElement newton = value / slope;
      const EvenElement denom = EvenElement{1.0} - newton * repulsion;
      const EvenElement step = denom.is_zero() ? newton : newton / denom;
      z[i] -= step;
      if (abs(step) <= kEps * abs(z[i])) done[i] = true;
    }
    if (all_done) return z;
  }
  throw RootFinderFailure("root finder did not converge after " +
                          std::to_string(opts.max_iterations) +
                          " iterations (ill-conditioned denominator)");
}

std::vector<RootCluster> cluster_roots(const Polynomial& p, std::span<const EvenElement> approx,
                                       const RootFinderOptions& opts) {
  std::vector<std::size_t> pending(approx.size());
  std::iota(pending.begin(), pending.end(), std::size_t{0});
  std::vector<RootCluster> out;

  // derivatives[j] = p^(j)
  std::vector<Polynomial> derivatives{p};
  for (int j = 0; j < p.degree(); ++j) derivatives.push_back(derivatives.back().derivative());

  // An m-fold root of p is a simple root of p^(m-1): Newton on it recovers
  // the location to working precision from the scattered approximations.
  auto polish = [&](EvenElement c, int m) {
    const Polynomial& q = derivatives[static_cast<std::size_t>(m - 1)];
    const Polynomial& dq = derivatives[static_cast<std::size_t>(m)];
    if (dq.is_zero()) return c;
    for (int it = 0; it < 30; ++it) {
      const EvenElement slope = dq(c);
      if (slope.is_zero()) break;
      const EvenElement step = q(c) / slope;
      const EvenElement next = c - step;
      if (abs(q(next)) > abs(q(c))) break;
      c = next;
      if (abs(step) <= 4.0 * kEps * abs(c)) break;
    }
    return c;
  };

  // The first m Taylor coefficients at c vanish, and every member lies within
  // the scatter that the root finder's stopping rule, |p(z)| <= 4 n eps S(z),
  // allows around c. The second test stops a far group from polishing its
  // way into a neighbouring cluster.
  const double stop = 4.0 * p.degree() * kEps;
  auto is_multiple_root = [&](EvenElement c, int m, std::span<const std::size_t> members) {
    const auto t = p.taylor_at(c);
    const auto scale = taylor_scales(p, abs(c));
    for (int j = 0; j < m; ++j) {
      const auto k = static_cast<std::size_t>(j);
      if (abs(t[k]) > opts.cluster_tolerance * scale[k]) return false;
    }
    // Radius of the region where |p| can drop to the stopping threshold; the
    // dominant term decides, which matters next to a higher-order cluster.
    double reach = std::numeric_limits<double>::infinity();
    for (std::size_t k = static_cast<std::size_t>(m); k < t.size(); ++k) {
      const double tk = abs(t[k]);
      if (tk > 0.0) reach = std::min(reach, std::pow(stop * scale[0] / tk, 1.0 / static_cast<double>(k)));
    }
    reach = 10.0 * reach + 4.0 * kEps * abs(c);
    return std::all_of(members.begin(), members.end(),
                       [&](std::size_t i) { return abs(approx[i] - c) <= reach; });
  };

  while (!pending.empty()) {
    const EvenElement seed = approx[pending.front()];
    std::vector<std::size_t> by_distance = pending;
    std::stable_sort(by_distance.begin(), by_distance.end(), [&](std::size_t a, std::size_t b) {
      return abs(approx[a] - seed) < abs(approx[b] - seed);
    });

    // Largest group of nearest approximations that is one multiple root.
    int best = 1;
    EvenElement best_center = polish(seed, 1);
    EvenElement sum{};
    for (std::size_t m = 1; m <= by_distance.size(); ++m) {
      sum += approx[by_distance[m - 1]];
      const EvenElement center = polish(sum / static_cast<double>(m), static_cast<int>(m));
      if (is_multiple_root(center, static_cast<int>(m), std::span(by_distance).first(m))) {
        best = static_cast<int>(m);
        best_center = center;
      }
    }

    // A component below rounding level relative to the root is dust.
    const double dust = 4.0 * kEps * abs(best_center);
    if (std::abs(best_center.u) <= dust) best_center.u = 0.0;
    if (std::abs(best_center.v) <= dust) best_center.v = 0.0;
    out.push_back({best_center, best});
    const std::vector<std::size_t> taken(by_distance.begin(), by_distance.begin() + best);
    std::erase_if(pending, [&](std::size_t idx) {
      return std::find(taken.begin(), taken.end(), idx) != taken.end();
    });
  }
  return out;
}

std::vector<RootCluster> find_roots(const Polynomial& p, const RootFinderOptions& opts) {
  const auto approx = aberth_roots(p, opts);
  return cluster_roots(p, approx, opts);
}

}  // namespace kahler
