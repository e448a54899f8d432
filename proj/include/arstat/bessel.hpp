#ifndef ARSTAT_BESSEL_HPP
#define ARSTAT_BESSEL_HPP

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "arstat/params.hpp"

namespace arstat {

namespace detail {

// Taylor coefficients of 1/Gamma(z) = sum_k c_k z^k (k = 1..26).
inline constexpr std::array<double, 26> kReciprocalGamma = {
    1.0,
    0.5772156649015329,
    -0.6558780715202538,
    -0.0420026350340952,
    0.1665386113822915,
    -0.0421977345555443,
    -0.0096219715278770,
    0.0072189432466630,
    -0.0011651675918591,
    -0.0002152416741149,
    0.0001280502823882,
    -0.0000201348547807,
    -0.0000012504934821,
    0.0000011330272320,
    -0.0000002056338417,
    0.0000000061160950,
    0.0000000050020075,
    -0.0000000011812746,
    0.0000000001043427,
    0.0000000000077823,
    -0.0000000000036968,
    0.0000000000005100,
    -0.0000000000000206,
    -0.0000000000000054,
    0.0000000000000014,
    0.0000000000000001,
};

/// Temme's auxiliary functions
///   gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu),  gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
/// plus 1/Gamma(1+mu) and 1/Gamma(1-mu), for |mu| <= 1/2.
struct TemmeGammas {
  double gam1, gam2, gampl, gammi;
};

inline TemmeGammas temme_gammas(double mu) {
  TemmeGammas g{};
  g.gampl = 1.0 / std::tgamma(1.0 + mu);
  g.gammi = 1.0 / std::tgamma(1.0 - mu);
  g.gam2 = 0.5 * (g.gammi + g.gampl);
  if (std::abs(mu) >= 0.1) {
    g.gam1 = (g.gammi - g.gampl) / (2.0 * mu);
  } else {
    // 1/Gamma(1+x) = sum_k c_k x^(k-1); the odd part gives gam1 without cancellation.
    double sum = 0.0;
    const double mu2 = mu * mu;
    double power = 1.0;
    for (std::size_t k = 2; k <= kReciprocalGamma.size(); k += 2) {
      sum += kReciprocalGamma[k - 1] * power;
      power *= mu2;
    }
    g.gam1 = -sum;
  }
  return g;
}

/// K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2.
inline std::pair<double, double> bessel_k_pair(double mu, double x) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double pi = std::numbers::pi;
  constexpr int max_iter = 10000;
  if (x < 2.0) {
    // Temme's series.
    const double x2 = 0.5 * x;
    const double pimu = pi * mu;
    const double fact = std::abs(pimu) < eps ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = std::abs(e) < eps ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(mu);
    double ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / g.gampl;
    double q = 0.5 / (e * g.gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    for (int i = 1; i <= max_iter; ++i) {
      const double di = i;
      ff = (di * ff + p + q) / (di * di - mu * mu);
      c *= d / di;
      p /= di - mu;
      q /= di + mu;
      const double del = c * ff;
      sum += del;
      sum1 += c * (p - di * ff);
      if (std::abs(del) < std::abs(sum) * eps) break;
    }
    return {sum, sum1 * 2.0 / x};
  }
  // Steed's continued fraction CF2 (Thompson-Barnett form).
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d, delh = d;
  double q1 = 0.0, q2 = 1.0;
  const double a1 = 0.25 - mu * mu;
  double q = a1, c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i <= max_iter; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < eps) break;
  }
  h *= a1;
  const double kmu = std::sqrt(pi / (2.0 * x)) * std::exp(-x) / s;
  const double kmu1 = kmu * (mu + x + 0.5 - h) / x;
  return {kmu, kmu1};
}

}  // namespace detail

/// Modified Bessel function of the second kind K_nu(x), x > 0.
///
/// Temme's series below x = 2 and Steed's continued fraction above, both for a
/// reduced order |mu| <= 1/2, followed by upward recurrence (stable for K).
/// K_{-nu} = K_nu. Returns +inf where the value exceeds the double range.
inline double bessel_k(double nu, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k requires x > 0");
  nu = std::abs(nu);
  const int steps = static_cast<int>(nu + 0.5);
  const double mu = nu - steps;
  auto [kmu, kmu1] = detail::bessel_k_pair(mu, x);
  for (int i = 1; i <= steps; ++i) {
    const double next = (mu + i) * (2.0 / x) * kmu1 + kmu;
    kmu = kmu1;
    kmu1 = next;
  }
  return kmu;
}

}  // namespace arstat

#endif  // ARSTAT_BESSEL_HPP
