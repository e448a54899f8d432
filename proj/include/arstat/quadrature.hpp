#ifndef ARSTAT_QUADRATURE_HPP
#define ARSTAT_QUADRATURE_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace arstat {

/// Nodes and weights of a one-dimensional rule on a fixed interval.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// n-point Gauss-Legendre rule on [a, b]; roots by Newton iteration on the
/// three-term recurrence.
inline QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0) {
  if (n < 1) throw std::invalid_argument("gauss_legendre needs at least one node");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Recompute the derivative at the converged root.
    double p1 = 1.0, p2 = 0.0;
    for (int j = 1; j <= n; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
    }
    dp = n * (z * p1 - p2) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = mid - half * z;
    rule.nodes[hi] = mid + half * z;
    rule.weights[lo] = half * w;
    rule.weights[hi] = half * w;
  }
  return rule;
}

/// Tanh-sinh (double exponential) rule with n nodes on [a, b]:
/// x = mid + half tanh(pi/2 sinh t), t = j h for |j| <= (n-1)/2, h = t_max / ((n-1)/2).
/// Nodes are kept off the endpoints, so integrable endpoint singularities are fine.
inline QuadratureRule tanh_sinh(int n, double a, double b, double t_max = 3.2) {
  if (n < 3) throw std::invalid_argument("tanh_sinh needs at least three nodes");
  const int half_count = (n - 1) / 2;
  const double h = t_max / half_count;
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  constexpr double pi2 = 0.5 * std::numbers::pi;
  QuadratureRule rule;
  for (int j = -half_count; j <= half_count; ++j) {
    const double t = j * h;
    const double u = pi2 * std::sinh(t);
    const double ch = std::cosh(u);
    // Distance to the nearer endpoint, computed without cancellation.
    const double gap = half / (std::exp(std::abs(u)) * ch);
    const double x = j < 0 ? a + gap : (j > 0 ? b - gap : mid);
    const double w = half * h * pi2 * std::cosh(t) / (ch * ch);
    if (gap <= 0.0 || w == 0.0) continue;
    rule.nodes.push_back(x);
    rule.weights.push_back(w);
  }
  return rule;
}

}  // namespace arstat

#endif  // ARSTAT_QUADRATURE_HPP
