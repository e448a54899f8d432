#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "arstat/fock.hpp"
#include "arstat/measures.hpp"

using namespace arstat;

namespace {
StatisticsParams bos(int r, int k) { return {r, k, Sign::bosonic}; }
StatisticsParams fer(int r, int k) { return {r, k, Sign::fermionic}; }
}  // namespace

TEST(BesselK, AgainstStandardLibrary) {
  for (double nu : {0.0, 0.1, 0.3, 0.5, 1.0, 1.7, 2.5, 3.0, 5.0, 7.0, 12.0})
    for (double x : {1e-3, 0.05, 0.5, 1.0, 1.9, 2.0, 2.1, 5.0, 12.0, 40.0}) {
      const double want = std::cyl_bessel_k(nu, x);
      if (!std::isfinite(want) || want > 1e300) continue;
      EXPECT_NEAR(bessel_k(nu, x) / want, 1.0, 1e-12) << "nu=" << nu << " x=" << x;
    }
}

TEST(BesselK, HalfIntegerClosedForms) {
  for (double x : {0.1, 1.0, 3.0, 10.0}) {
    const double k12 = std::sqrt(std::numbers::pi / (2 * x)) * std::exp(-x);
    EXPECT_NEAR(bessel_k(0.5, x) / k12, 1.0, 1e-13);
    EXPECT_NEAR(bessel_k(1.5, x) / (k12 * (1 + 1 / x)), 1.0, 1e-13);
    EXPECT_NEAR(bessel_k(2.5, x) / (k12 * (1 + 3 / x + 3 / (x * x))), 1.0, 1e-13);
  }
}

TEST(BesselK, SymmetryAndDomain) {
  EXPECT_DOUBLE_EQ(bessel_k(-2.3, 1.5), bessel_k(2.3, 1.5));
  EXPECT_THROW(bessel_k(1.0, 0.0), DomainError);
  EXPECT_THROW(bessel_k(1.0, -1.0), DomainError);
  EXPECT_TRUE(std::isinf(bessel_k(200.0, 1e-3)));
}

TEST(Quadrature, GaussLegendreExactForPolynomials) {
  for (int n : {1, 2, 5, 12, 40}) {
    const auto rule = gauss_legendre(n, 0.0, 2.0);
    double wsum = 0;
    for (double w : rule.weights) wsum += w;
    EXPECT_NEAR(wsum, 2.0, 1e-14);
    const int deg = 2 * n - 1;
    // int_0^2 x^deg dx
    EXPECT_NEAR(rule.integrate([&](double x) { return std::pow(x, deg); }) / (std::pow(2.0, deg + 1) / (deg + 1)), 1.0, 1e-13);
  }
}

TEST(Quadrature, TanhSinhEndpointSingularities) {
  // Singularity at the left end, where nodes are exact offsets from a.
  const auto rule = tanh_sinh(201, 0.0, 1.0, 4.5);
  EXPECT_NEAR(rule.integrate([](double x) { return 1.0 / std::sqrt(x); }), 2.0, 1e-10);
  EXPECT_NEAR(rule.integrate([](double x) { return std::log(x); }), -1.0, 1e-10);
  for (double x : rule.nodes) EXPECT_TRUE(x > 0.0 && x <= 1.0);
}

TEST(Measures, SpecValidation) {
  EXPECT_THROW(MeasureSpec(MeasureKind::gk_bessel, fer(1, 3)), ParameterError);
  EXPECT_THROW(MeasureSpec(MeasureKind::kp_fermionic_mellin, bos(1, 3)), ParameterError);
  EXPECT_THROW(MeasureSpec(MeasureKind::kp_simplex, bos(2, 2)), ParameterError);
  EXPECT_NO_THROW(MeasureSpec(MeasureKind::kp_simplex, bos(2, 3)));
}

TEST(Measures, DensityValues) {
  const double pi = std::numbers::pi;
  // GK r=1 k=2 at R=1: 2/pi * K_1(2)
  EXPECT_NEAR(density(MeasureSpec(MeasureKind::gk_bessel, bos(1, 2)), {1.0}), 2.0 / pi * std::cyl_bessel_k(1.0, 2.0), 1e-14);
  // R -> 0 limit for k > r: 2/(pi^r (k-1)!) * (k-r-1)!/2
  EXPECT_NEAR(density(MeasureSpec(MeasureKind::gk_bessel, bos(1, 3)), {0.0}), 1.0 / (2.0 * pi), 1e-15);
  EXPECT_TRUE(std::isinf(density(MeasureSpec(MeasureKind::gk_bessel, bos(2, 2)), {0.0, 0.0})));
  // simplex r=2 k=4 at rho = (0.3, 0.4): pi^-2 * 2 * 3 * (1 - 0.25)
  EXPECT_NEAR(density(MeasureSpec(MeasureKind::kp_simplex, bos(2, 4)), {0.3, 0.4}), 6.0 * 0.75 / (pi * pi), 1e-14);
  EXPECT_NEAR(density(MeasureSpec(MeasureKind::kp_simplex, bos(2, 5)), {0.0, 1.0}), 0.0, 1e-14);
  EXPECT_THROW(density(MeasureSpec(MeasureKind::kp_simplex, bos(1, 2)), {1.1}), DomainError);
  // fermionic r=1 k=3 at rho=1: (3!/2!) 2^-4 / pi
  EXPECT_NEAR(density(MeasureSpec(MeasureKind::kp_fermionic_mellin, fer(1, 3)), {1.0}), 3.0 / 16.0 / pi, 1e-15);
  EXPECT_GT(density(MeasureSpec(MeasureKind::gk_bessel, bos(2, 1)), {0.1, 0.2}), 0.0);
}

TEST(Measures, ElementarySimplexMoment) {
  // r=1, k=2: density 1/pi on the unit disc, moment = 1/(n+1).
  const MeasureSpec spec(MeasureKind::kp_simplex, bos(1, 2));
  for (int n = 0; n <= 5; ++n) {
    const auto m = verify_moment(spec, MultiIndex{n});
    EXPECT_NEAR(m.lhs, 1.0 / (n + 1), 1e-12);
    EXPECT_NEAR(m.rhs, 1.0 / (n + 1), 1e-15);
  }
}

TEST(Measures, ElementaryGkMoment) {
  // r=1, k=1: 2 pi int (2/pi) K_0(2 rho) rho^{2n+1} d rho = (n!)^2.
  const MeasureSpec spec(MeasureKind::gk_bessel, bos(1, 1));
  for (int n = 0; n <= 4; ++n) {
    const double f = std::tgamma(n + 1.0);
    EXPECT_NEAR(verify_moment(spec, MultiIndex{n}).lhs / (f * f), 1.0, 1e-9);
  }
}

TEST(Measures, AllMomentsWithinTolerance) {
  for (int r = 1; r <= 2; ++r)
    for (int k = 1; k <= 6; ++k) {
      std::vector<MeasureSpec> specs{MeasureSpec(MeasureKind::gk_bessel, bos(r, k))};
      if (k > r) specs.emplace_back(MeasureKind::kp_simplex, bos(r, k));
      if (k >= 2) specs.emplace_back(MeasureKind::kp_fermionic_mellin, fer(r, k));
      for (const auto& spec : specs) {
        const int top = spec.kind() == MeasureKind::kp_fermionic_mellin ? std::min(4, k - 1) : 4;
        for (const auto& n : graded_indices(r, top)) {
          const auto m = verify_moment(spec, n);
          EXPECT_LE(m.rel_error, 1e-6) << measure_name(spec.kind()) << " r=" << r << " k=" << k << " n=" << n;
          EXPECT_TRUE(m.converged);
        }
      }
    }
}

TEST(Measures, DoublingTrace) {
  QuadratureConfig q;
  q.nodes = 12;
  const auto m = verify_moment(MeasureSpec(MeasureKind::gk_bessel, bos(2, 3)), MultiIndex{1, 1}, q);
  ASSERT_GE(m.trace.size(), 2u);
  EXPECT_EQ(m.trace[0].first, 12);
  EXPECT_EQ(m.trace[1].first, 24);
  EXPECT_EQ(m.nodes_used, m.trace.back().first);
  q.nodes = 4;
  EXPECT_THROW(verify_moment(MeasureSpec(MeasureKind::gk_bessel, bos(1, 3)), MultiIndex{1}, q), ParameterError);
}

TEST(Measures, AngularConventions) {
  const auto m = verify_moment(MeasureSpec(MeasureKind::kp_simplex, bos(2, 3)), MultiIndex{1, 0});
  const double angular = 4.0 * std::numbers::pi * std::numbers::pi;
  EXPECT_NEAR(m.lhs_radial * angular, m.lhs, 1e-14 * m.lhs);
  EXPECT_NEAR(m.rhs_printed * angular, m.rhs, 1e-14 * m.rhs);
}

TEST(Measures, DirichletIdentity) {
  for (int r = 1; r <= 2; ++r)
    for (int k = r + 1; k <= 6; ++k)
      for (const auto& n : graded_indices(r, 4)) EXPECT_LE(verify_dirichlet_identity(r, k, n).rel_error, 1e-8);
  // r=2, k=3, n=0: area of the unit simplex is 1/2 and the right side is 2!/(2! * 1 * 2) = 1/2.
  EXPECT_NEAR(verify_dirichlet_identity(2, 3, MultiIndex{0, 0}).lhs, 0.5, 1e-15);
  EXPECT_THROW(verify_dirichlet_identity(2, 2, MultiIndex{0, 0}), ParameterError);
}
