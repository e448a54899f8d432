#ifndef ARSTAT_MEASURES_HPP
#define ARSTAT_MEASURES_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arstat/bessel.hpp"
#include "arstat/combinatorics.hpp"
#include "arstat/params.hpp"
#include "arstat/quadrature.hpp"

namespace arstat {

enum class MeasureKind { gk_bessel, kp_simplex, kp_fermionic_mellin };

inline std::string_view measure_name(MeasureKind k) {
  switch (k) {
    case MeasureKind::gk_bessel: return "gk-bessel";
    case MeasureKind::kp_simplex: return "kp-simplex";
    case MeasureKind::kp_fermionic_mellin: return "kp-fermionic-mellin";
  }
  return "?";
}

inline MeasureKind measure_from_name(std::string_view name) {
  if (name == "gk-bessel" || name == "gk") return MeasureKind::gk_bessel;
  if (name == "kp-simplex" || name == "kp-bosonic" || name == "simplex") return MeasureKind::kp_simplex;
  if (name == "kp-fermionic-mellin" || name == "kp-fermionic" || name == "mellin") return MeasureKind::kp_fermionic_mellin;
  throw ParameterError("unknown measure kind: " + std::string(name));
}

/// Inner-product measure of one analytic realization.
class MeasureSpec {
 public:
  MeasureSpec(MeasureKind kind, StatisticsParams params) : kind_(kind), params_(params) {
    const bool want_fermionic = kind == MeasureKind::kp_fermionic_mellin;
    if (want_fermionic != params.fermionic())
      throw ParameterError(std::string(measure_name(kind)) + " measure requires s = " + (want_fermionic ? "-1" : "+1"));
    if (kind == MeasureKind::kp_simplex && params.k() <= params.r())
      throw ParameterError("kp-simplex measure requires k > r (density exponent k-r-1 must be non-negative)");
    if (want_fermionic && params.k() < 2) throw ParameterError("fermionic measure requires k >= 2");
  }

  MeasureKind kind() const { return kind_; }
  const StatisticsParams& params() const { return params_; }

 private:
  MeasureKind kind_;
  StatisticsParams params_;
};

/// Weight mu(x) = ((k-1+r)!/(k-1)!) (1 + sum x_i)^{-(k+r)} in the variables x_i = |zeta_i|^2.
inline double mellin_weight(const StatisticsParams& p, double x_sum) {
  if (x_sum < 0.0) throw DomainError("mellin weight requires x_i >= 0");
  const int k = p.k(), r = p.r();
  return factorial_ratio({k - 1 + r}, {k - 1}) * std::pow(1.0 + x_sum, -static_cast<double>(k + r));
}

/// Density with respect to d^2x_1 ... d^2x_r at radial coordinates rho_i = |x_i|.
///   GK:           2/(pi^r (k-1)!) R^{k-r} K_{k-r}(2R),  R^2 = sum rho_i^2
///   KP simplex:   pi^{-r} (k-r)(k-r+1)...(k-1) (1 - R^2)^{k-r-1},  R < 1
///   KP fermionic: mu(rho_1^2, ..., rho_r^2) / pi^r
inline double density(const MeasureSpec& spec, std::span<const double> radial) {
  const auto& p = spec.params();
  const int r = p.r(), k = p.k();
  if (static_cast<int>(radial.size()) != r) throw ParameterError("point must have r radial coordinates");
  double r2 = 0.0;
  for (double rho : radial) {
    if (rho < 0.0) throw DomainError("radial coordinates must be non-negative");
    r2 += rho * rho;
  }
  const double pi_r = std::pow(std::numbers::pi, r);
  switch (spec.kind()) {
    case MeasureKind::gk_bessel: {
      const double big_r = std::sqrt(r2);
      const double pref = 2.0 / (pi_r * factorial(k - 1));
      const int nu = k - r;
      if (big_r == 0.0) {
        // R^nu K_nu(2R) -> Gamma(nu)/2 for nu > 0; divergent otherwise.
        if (nu > 0) return pref * 0.5 * factorial(nu - 1);
        return std::numeric_limits<double>::infinity();
      }
      return pref * std::pow(big_r, nu) * bessel_k(nu, 2.0 * big_r);
    }
    case MeasureKind::kp_simplex: {
      if (r2 > 1.0) throw DomainError("kp-simplex density is defined for sum rho_i^2 < 1");
      return rising_product(k - r, r) / pi_r * std::pow(1.0 - r2, k - r - 1);
    }
    case MeasureKind::kp_fermionic_mellin:
      return mellin_weight(p, r2) / pi_r;
  }
  return 0.0;
}

inline double density(const MeasureSpec& spec, std::initializer_list<double> radial) {
  return density(spec, std::span<const double>(radial.begin(), radial.size()));
}

/// How the radial half-line or unit interval is discretized.
enum class RadialMapping {
  automatic,            ///< per-kind default below
  tanh_sinh_truncated,  ///< tanh-sinh on [0, L], L = 30 + 2n + k + r (GK default)
  gauss_legendre_unit,  ///< Gauss-Legendre on [0, 1] (KP simplex default)
  rational_half_line,   ///< R = u/(1-u), Gauss-Legendre in u on [0, 1] (KP fermionic default)
};

struct QuadratureConfig {
  int nodes = 25;          ///< starting node count per dimension (>= 8)
  int max_nodes = 200;     ///< node-doubling cap per dimension
  RadialMapping mapping = RadialMapping::automatic;
  double rel_tol = 1e-11;  ///< stop doubling once successive estimates agree to this
};

struct MomentReport {
  MeasureKind kind;
  StatisticsParams params;
  MultiIndex n;
  double lhs = 0.0;          ///< (2 pi)^r int density prod rho_i^{2 n_i + 1} d rho
  double rhs = 0.0;          ///< exact factorial right-hand side (1 / C_{k;n}^2)
  double rel_error = 0.0;
  int nodes_used = 0;
  bool converged = false;
  double lhs_radial = 0.0;   ///< same integral without the (2 pi)^r angular factor
  double rhs_printed = 0.0;  ///< right-hand side in the convention the moment equation is usually written
  std::vector<std::pair<int, double>> trace;  ///< (nodes, lhs) per doubling step
};

/// 1 / C_{k;n}^2 for the realization belonging to the measure kind.
inline double moment_rhs(MeasureKind kind, const StatisticsParams& p, const MultiIndex& n) {
  const int k = p.k(), total = n.total();
  std::vector<int> num(n.occupations()), den;
  switch (kind) {
    case MeasureKind::gk_bessel:
      num.push_back(k - 1 + total);
      den = {k - 1};
      break;
    case MeasureKind::kp_simplex:
      num.push_back(k - 1);
      den = {k - 1 + total};
      break;
    case MeasureKind::kp_fermionic_mellin:
      if (total > p.pauli_bound()) throw DomainError("fermionic moment index exceeds k-1");
      num.push_back(k - 1 - total);
      den = {k - 1};
      break;
  }
  return factorial_ratio(num, den);
}

namespace detail {

/// One evaluation of the moment integral on an r-dimensional tensor grid in
/// hyperspherical coordinates rho = R u(theta), theta in [0, pi/2]^{r-1}.
inline double moment_integral(const MeasureSpec& spec, const MultiIndex& n, int nodes, RadialMapping mapping) {
  const auto& p = spec.params();
  const int r = p.r();
  if (mapping == RadialMapping::automatic) {
    switch (spec.kind()) {
      case MeasureKind::gk_bessel: mapping = RadialMapping::tanh_sinh_truncated; break;
      case MeasureKind::kp_simplex: mapping = RadialMapping::gauss_legendre_unit; break;
      case MeasureKind::kp_fermionic_mellin: mapping = RadialMapping::rational_half_line; break;
    }
  }
  if (mapping == RadialMapping::gauss_legendre_unit && spec.kind() != MeasureKind::kp_simplex)
    throw ParameterError("unit-interval radial mapping only applies to the kp-simplex measure");

  // Radial nodes R with weights dR (Jacobian of any substitution folded in).
  std::vector<double> radii, rweights;
  switch (mapping) {
    case RadialMapping::tanh_sinh_truncated: {
      const double upper = spec.kind() == MeasureKind::kp_simplex ? 1.0 : 30.0 + 2.0 * n.total() + p.k() + r;
      const QuadratureRule rule = tanh_sinh(nodes | 1, 0.0, upper);
      radii = rule.nodes;
      rweights = rule.weights;
      break;
    }
    case RadialMapping::gauss_legendre_unit: {
      const QuadratureRule rule = gauss_legendre(nodes, 0.0, 1.0);
      radii = rule.nodes;
      rweights = rule.weights;
      break;
    }
    case RadialMapping::rational_half_line: {
      if (spec.kind() == MeasureKind::kp_simplex) throw ParameterError("rational mapping does not apply to the unit ball");
      const QuadratureRule rule = gauss_legendre(nodes, 0.0, 1.0);
      for (std::size_t i = 0; i < rule.size(); ++i) {
        const double u = rule.nodes[i];
        radii.push_back(u / (1.0 - u));
        rweights.push_back(rule.weights[i] / ((1.0 - u) * (1.0 - u)));
      }
      break;
    }
    case RadialMapping::automatic: break;
  }

  const QuadratureRule angle = gauss_legendre(nodes, 0.0, 0.5 * std::numbers::pi);
  const int n_angles = r - 1;
  std::vector<int> counter(static_cast<std::size_t>(std::max(n_angles, 0)), 0);
  std::vector<double> u(static_cast<std::size_t>(r)), rho(static_cast<std::size_t>(r));
  double total = 0.0;
  while (true) {
    // Direction cosines and the angular part of the Jacobian.
    double ang_weight = 1.0, sin_prod = 1.0;
    for (int j = 0; j < n_angles; ++j) {
      const double th = angle.nodes[static_cast<std::size_t>(counter[static_cast<std::size_t>(j)])];
      ang_weight *= angle.weights[static_cast<std::size_t>(counter[static_cast<std::size_t>(j)])] *
                    std::pow(std::sin(th), r - 2 - j);
      u[static_cast<std::size_t>(j)] = sin_prod * std::cos(th);
      sin_prod *= std::sin(th);
    }
    u[static_cast<std::size_t>(r - 1)] = sin_prod;
    double ang_mono = 1.0;
    for (int i = 0; i < r; ++i) ang_mono *= std::pow(u[static_cast<std::size_t>(i)], 2 * n[i] + 1);

    for (std::size_t q = 0; q < radii.size(); ++q) {
      const double big_r = radii[q];
      for (int i = 0; i < r; ++i) rho[static_cast<std::size_t>(i)] = big_r * u[static_cast<std::size_t>(i)];
      const double dens = density(spec, std::span<const double>(rho));
      // prod rho_i^{2n_i+1} = R^{2n+r} prod u_i^{2n_i+1};  Jacobian R^{r-1}.
      total += rweights[q] * ang_weight * dens * ang_mono * std::pow(big_r, 2 * n.total() + 2 * r - 1);
    }

    int j = 0;
    while (j < n_angles && ++counter[static_cast<std::size_t>(j)] == static_cast<int>(angle.size()))
      counter[static_cast<std::size_t>(j++)] = 0;
    if (j == n_angles) break;
  }
  return std::pow(2.0 * std::numbers::pi, r) * total;
}

}  // namespace detail

/// Numerically integrates the moment of the measure and compares it with the
/// exact right-hand side. The node count doubles until two successive
/// estimates agree to quad.rel_tol or the cap is reached.
inline MomentReport verify_moment(const MeasureSpec& spec, const MultiIndex& n, const QuadratureConfig& quad = {}) {
  if (quad.nodes < 8) throw ParameterError("quadrature node count must be at least 8");
  if (n.size() != spec.params().r()) throw ParameterError("multi-index length differs from r");
  MomentReport rep{spec.kind(), spec.params(), n};
  rep.rhs = moment_rhs(spec.kind(), spec.params(), n);

  int nodes = quad.nodes;
  double previous = detail::moment_integral(spec, n, nodes, quad.mapping);
  rep.trace.emplace_back(nodes, previous);
  double current = previous;
  while (nodes < quad.max_nodes) {
    nodes = std::min(2 * nodes, quad.max_nodes);
    current = detail::moment_integral(spec, n, nodes, quad.mapping);
    rep.trace.emplace_back(nodes, current);
    if (std::abs(current - previous) <= quad.rel_tol * std::abs(current)) {
      rep.converged = true;
      break;
    }
    previous = current;
  }
  rep.lhs = current;
  rep.nodes_used = nodes;
  rep.rel_error = std::abs(rep.lhs - rep.rhs) / std::abs(rep.rhs);
  const double angular = std::pow(2.0 * std::numbers::pi, spec.params().r());
  rep.lhs_radial = rep.lhs / angular;
  rep.rhs_printed = spec.kind() == MeasureKind::kp_simplex ? rep.rhs / angular : rep.rhs;
  return rep;
}

struct DirichletReport {
  int r = 0, k = 0;
  MultiIndex n;
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_error = 0.0;
  int nodes_used = 0;
};

/// Iterated simplex integral
///   int t_1^{n_1} ... t_r^{n_r} (1 - sum t)^{k-r-1} dt
/// by nested Gauss-Legendre, against
///   n_1!...n_r! (k-1)! / ((k-1+n)! (k-r)(k-r+1)...(k-1)).
inline DirichletReport verify_dirichlet_identity(int r, int k, const MultiIndex& n, int nodes = 0) {
  if (r <= 0) throw ParameterError("r must be positive");
  if (k <= r) throw ParameterError("dirichlet identity requires k > r");
  if (n.size() != r) throw ParameterError("multi-index length differs from r");
  // The integrand is a polynomial of degree n + k - r - 1 in each variable.
  if (nodes <= 0) nodes = (n.total() + k - r) / 2 + 2;
  const QuadratureRule base = gauss_legendre(nodes, 0.0, 1.0);
  const int expo = k - r - 1;
  // Integrate over t_pos..t_r with remaining length `room`.
  auto nested = [&](auto&& self, int pos, double room) -> double {
    if (pos == r) return std::pow(room, expo);
    double sum = 0.0;
    for (std::size_t q = 0; q < base.size(); ++q) {
      const double t = room * base.nodes[q];
      sum += room * base.weights[q] * std::pow(t, n[pos]) * self(self, pos + 1, room - t);
    }
    return sum;
  };
  DirichletReport rep{r, k, n};
  rep.lhs = nested(nested, 0, 1.0);
  std::vector<int> num(n.occupations());
  num.push_back(k - 1);
  rep.rhs = factorial_ratio(num, std::vector<int>{k - 1 + n.total()}) / rising_product(k - r, r);
  rep.rel_error = std::abs(rep.lhs - rep.rhs) / rep.rhs;
  rep.nodes_used = nodes;
  return rep;
}

}  // namespace arstat

#endif  // ARSTAT_MEASURES_HPP
