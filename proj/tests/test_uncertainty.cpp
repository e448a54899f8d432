#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "arstat/uncertainty.hpp"

using namespace arstat;

namespace {
StatisticsParams bos(int r, int k) { return {r, k, Sign::bosonic}; }
StatisticsParams fer(int r, int k) { return {r, k, Sign::fermionic}; }

Vector basis_vector(Eigen::Index dim, Eigen::Index p) {
  Vector v = Vector::Zero(dim);
  v(p) = 1.0;
  return v;
}

double min_eigenvalue(const RealMatrix& m) {
  return Eigen::SelfAdjointEigenSolver<RealMatrix>(m, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
}
}  // namespace

TEST(Quadratures, FermionicTwoLevel) {
  const LadderSet l = build_ladder_set(enumerate_basis(fer(1, 2), 0));
  const auto q = canonical_quadratures(l);
  ASSERT_EQ(q.ops.size(), 2u);
  EXPECT_NEAR(std::abs(q.ops[0](0, 1) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(q.ops[0](1, 0) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(q.ops[0](0, 0)), 0.0, 1e-15);
  for (const auto& x : q.ops) EXPECT_TRUE(is_hermitian(x, 1e-12));
}

TEST(Quadratures, CountAndVacuumMeans) {
  const LadderSet l = build_ladder_set(enumerate_basis(bos(3, 2), 3));
  const auto q = canonical_quadratures(l);
  EXPECT_EQ(q.ops.size(), 6u);
  const Vector vac = basis_vector(l.dimension(), 0);
  for (const auto& x : q.ops) EXPECT_NEAR(std::abs(vac.dot(x * vac)), 0.0, 1e-15);
}

TEST(Quadratures, IdentityTransformIsCanonical) {
  const LadderSet l = build_ladder_set(enumerate_basis(bos(2, 3), 4));
  const auto c = canonical_quadratures(l);
  const auto t = intelligent_quadratures(Matrix::Identity(2, 2), Matrix::Zero(2, 2), l);
  EXPECT_EQ(t.provenance, QuadratureProvenance::transformed);
  for (std::size_t a = 0; a < c.ops.size(); ++a) EXPECT_LT((c.ops[a] - t.ops[a]).norm(), 1e-14);
}

TEST(Quadratures, SingularOmegaRejected) {
  const LadderSet l = build_ladder_set(enumerate_basis(fer(1, 3), 0));
  EXPECT_THROW(intelligent_quadratures(Matrix::Zero(1, 1), Matrix::Zero(1, 1), l), DomainError);
  // |u| = |v| with matching phases also collapses Omega.
  EXPECT_THROW(intelligent_quadratures(Matrix::Constant(1, 1, 1.0), Matrix::Constant(1, 1, 1.0), l), DomainError);
  EXPECT_THROW(intelligent_quadratures(Matrix::Identity(2, 2), Matrix::Zero(1, 1), l), ParameterError);
}

TEST(Moments, VacuumBosonic) {
  for (int k = 1; k <= 5; ++k) {
    const LadderSet l = build_ladder_set(enumerate_basis(bos(1, k), 2));
    const auto m = moment_matrices(basis_vector(l.dimension(), 0), canonical_quadratures(l));
    EXPECT_NEAR(m.sigma(0, 0), k / 4.0, 1e-14);
    EXPECT_NEAR(m.sigma(1, 1), k / 4.0, 1e-14);
    EXPECT_NEAR(m.sigma(0, 1), 0.0, 1e-14);
    EXPECT_NEAR(m.commutator(0, 1), k / 4.0, 1e-14);
    EXPECT_NEAR(m.commutator(1, 0), -k / 4.0, 1e-14);
    const auto rs = check_rs_minimization(m);
    EXPECT_TRUE(rs.pass);
  }
}

TEST(Moments, VacuumFermionic) {
  for (int k = 2; k <= 5; ++k) {
    const LadderSet l = build_ladder_set(enumerate_basis(fer(1, k), 0));
    const auto m = moment_matrices(basis_vector(l.dimension(), 0), canonical_quadratures(l));
    EXPECT_NEAR(m.sigma(0, 0), (k - 1) / 4.0, 1e-14);
    EXPECT_NEAR(m.commutator(0, 1), (k - 1) / 4.0, 1e-14);
    EXPECT_TRUE(check_rs_minimization(m).pass);
  }
}

TEST(Moments, UnnormalizedStateRejected) {
  const LadderSet l = build_ladder_set(enumerate_basis(fer(1, 3), 0));
  EXPECT_THROW(moment_matrices(Vector::Constant(3, 1.0), canonical_quadratures(l)), ParameterError);
}

TEST(Moments, FockExcitedNegativeControl) {
  // r=1, k=2, |1>: <a^- a^+> = F(2) = 6, <a^+ a^-> = F(1) = 2.
  const LadderSet l = build_ladder_set(enumerate_basis(bos(1, 2), 3));
  const Vector one = basis_vector(l.dimension(), 1);
  const auto m = moment_matrices(one, canonical_quadratures(l));
  EXPECT_NEAR(m.sigma(0, 0), 2.0, 1e-13);
  EXPECT_NEAR(m.sigma(1, 1), 2.0, 1e-13);
  EXPECT_NEAR(m.commutator(0, 1), 1.0, 1e-13);
  const auto rs = check_rs_minimization(m);
  EXPECT_NEAR(rs.det_sigma, 4.0, 1e-12);
  EXPECT_NEAR(rs.det_c, 1.0, 1e-12);
  EXPECT_FALSE(rs.pass);
  EXPECT_TRUE(rs.robertson_holds);
  EXPECT_FALSE(element_relations_check(one, l).pass());
}

TEST(Moments, RobertsonHoldsForRandomStates) {
  std::mt19937 rng(21);
  std::normal_distribution<double> g;
  for (auto p : {bos(1, 2), bos(2, 3), fer(2, 3), fer(1, 4)}) {
    const FockBasis b = enumerate_basis(p, p.fermionic() ? 0 : 4);
    const LadderSet wide = build_ladder_set(moment_basis(b));
    for (int t = 0; t < 5; ++t) {
      Vector psi(b.dimension());
      for (Eigen::Index i = 0; i < psi.size(); ++i) psi(i) = Complex(g(rng), g(rng));
      psi = pad(psi, wide.dimension());
      psi /= psi.norm();
      const auto m = moment_matrices(psi, canonical_quadratures(wide));
      EXPECT_LT((m.commutator + m.commutator.transpose()).norm(), 1e-12);
      EXPECT_LT((m.sigma - m.sigma.transpose()).norm(), 1e-12);
      EXPECT_GE(min_eigenvalue(m.sigma), -1e-10);
      EXPECT_TRUE(check_rs_minimization(m).robertson_holds) << p;
    }
  }
}

TEST(GkUncertainty, SpecExample) {
  const auto rep = gk_uncertainty(CoherentStateSpec(CoherentFamily::gk, {0.3}, bos(1, 2), 25));
  EXPECT_LE(rep.rs.gap, 1e-8);
  EXPECT_TRUE(rep.checks.pass());
}

TEST(GkUncertainty, GridProperty) {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int r = 1; r <= 2; ++r)
    for (int k = 1; k <= 4; ++k)
      for (double radius : {0.0, 0.2, 0.5}) {
        std::vector<Complex> w;
        for (int i = 0; i < r; ++i) w.emplace_back(radius / std::sqrt(2.0 * r) * u(rng), radius / std::sqrt(2.0 * r) * u(rng));
        const auto rep = gk_uncertainty(CoherentStateSpec(CoherentFamily::gk, w, bos(r, k)));
        EXPECT_LE(rep.rs.gap, 1e-8) << "r=" << r << " k=" << k;
        EXPECT_GE(rep.rs.min_sigma_eigenvalue, -1e-10);
        EXPECT_TRUE(rep.checks.pass()) << rep.state_spec;
      }
}

TEST(GkUncertainty, ElementRelationsExample) {
  const CoherentStateSpec spec(CoherentFamily::gk, {0.2, 0.1}, bos(2, 3), 20);
  const auto st = build_state(spec);
  const LadderSet wide = build_ladder_set(moment_basis(enumerate_basis(spec.params, 20)));
  const auto rep = element_relations_check(pad(st.amplitudes, wide.dimension()), wide, 1e-9);
  EXPECT_TRUE(rep.pass());
  EXPECT_LE(rep.max_residual(), 1e-9);
}

TEST(Decomposition, IdentityDisplacement) {
  for (auto p : {fer(1, 3), fer(2, 3), bos(1, 2)}) {
    const LadderSet l = build_ladder_set(enumerate_basis(p, p.fermionic() ? 0 : 8));
    const auto dec = decompose_transformed_creator(Matrix::Identity(l.dimension(), l.dimension()), l);
    EXPECT_LT(dec.x.norm(), 1e-12);
    EXPECT_LT((dec.y - Matrix::Identity(p.r(), p.r())).norm(), 1e-12);
    for (const auto& z : dec.z) EXPECT_LT(std::abs(z), 1e-12);
    EXPECT_LT(dec.relative_residual, 1e-12);
  }
}

TEST(Decomposition, FermionicSingleModeExact) {
  const auto p = fer(1, 3);
  const LadderSet l = build_ladder_set(enumerate_basis(p, 0));
  const DisplacementParams dp{CoherentFamily::kp_fermionic, {0.3}};
  const Matrix d = displacement_operator(dp, l);
  const auto dec = decompose_transformed_creator(d, l);
  EXPECT_LE(dec.residual, 1e-10);
  EXPECT_FALSE(dec.rank_deficient);
  // su(2) rotation by angle 2 * 0.3: |y| = cos^2(0.3), |x| = sin^2(0.3).
  EXPECT_NEAR(std::abs(dec.y(0, 0)), std::pow(std::cos(0.3), 2), 1e-12);
  EXPECT_NEAR(std::abs(dec.x(0, 0)), std::pow(std::sin(0.3), 2), 1e-12);

  const auto ic = intelligent_coefficients(dec, p);
  EXPECT_LT(ic.condition_residual, 1e-12);
  const Vector coh = d.col(0);
  const auto q = intelligent_quadratures(ic.u, ic.v, l);
  const Vector diff = q.a_ops[0] * coh - ic.lambda[0] * coh;
  EXPECT_LE(diff.norm(), 1e-8);
  EXPECT_LE(check_rs_minimization(coh, q).gap, 1e-8);
}

TEST(Decomposition, FermionicTwoModes) {
  const LadderSet l = build_ladder_set(enumerate_basis(fer(2, 3), 0));
  const DisplacementParams dp{CoherentFamily::kp_fermionic, {Complex(0.3, -0.2), Complex(0.4, 0.5)}};
  EXPECT_LE(decompose_transformed_creator(displacement_operator(dp, l), l).residual, 1e-8);
}

TEST(Decomposition, RankDeficiencyReported) {
  const LadderSet l = build_ladder_set(enumerate_basis(bos(1, 2), 6));
  const auto dec = decompose_transformed_creator(Matrix::Identity(l.dimension(), l.dimension()), l, 1);
  EXPECT_TRUE(dec.rank_deficient);
  EXPECT_EQ(dec.fitted_dimension, 1);
}

TEST(KpUncertainty, FermionicPipeline) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int r = 1; r <= 2; ++r)
    for (int k = 2; k <= 4; ++k) {
      std::vector<Complex> z;
      for (int i = 0; i < r; ++i) z.emplace_back(u(rng), u(rng));
      const auto rep = kp_uncertainty(CoherentStateSpec(CoherentFamily::kp_fermionic, z, fer(r, k)), 1e-8);
      EXPECT_LE(rep.rs.gap, 1e-8) << rep.state_spec;
      EXPECT_TRUE(rep.checks.pass()) << rep.state_spec;
      EXPECT_EQ(rep.provenance, QuadratureProvenance::transformed);
    }
}

TEST(KpUncertainty, BosonicSpecExample) {
  const auto rep = kp_uncertainty(CoherentStateSpec(CoherentFamily::kp_bosonic, {0.4}, bos(1, 2), 40), 1e-6);
  EXPECT_LE(rep.rs.gap, 1e-6);
  EXPECT_TRUE(rep.checks.pass());
  EXPECT_GE(rep.rs.min_sigma_eigenvalue, -1e-10);
}

TEST(KpUncertainty, BosonicTwoModes) {
  const auto rep = kp_uncertainty(
      CoherentStateSpec(CoherentFamily::kp_bosonic, {Complex(0.2, 0.1), Complex(0.1, -0.15)}, bos(2, 2), 24), 1e-6);
  EXPECT_LE(rep.rs.gap, 1e-6);
  EXPECT_TRUE(rep.checks.pass());
}

TEST(KpUncertainty, TransformationConsistency) {
  const auto rep = kp_uncertainty(CoherentStateSpec(CoherentFamily::kp_fermionic, {0.5, Complex(0.0, 0.7)}, fer(2, 3)));
  bool seen = false;
  for (const auto& e : rep.checks.entries())
    if (e.name.find("T^T") != std::string::npos) {
      seen = true;
      EXPECT_LE(e.residual, 1e-10) << e.name;
    }
  EXPECT_TRUE(seen);
}

TEST(KpUncertainty, DispatchAndErrors) {
  EXPECT_THROW(kp_uncertainty(CoherentStateSpec(CoherentFamily::gk, {0.1}, bos(1, 2))), ParameterError);
  EXPECT_THROW(gk_uncertainty(CoherentStateSpec(CoherentFamily::kp_fermionic, {0.1}, fer(1, 3))), ParameterError);
  EXPECT_EQ(coherent_uncertainty(CoherentStateSpec(CoherentFamily::gk, {0.1}, bos(1, 2))).provenance,
            QuadratureProvenance::canonical);
}

TEST(KpUncertainty, BosonicLargeLabel) {
  // Low shells spread binomially under D, so this case needs the padded decomposition.
  const auto ir = kp_uncertainty(CoherentStateSpec(CoherentFamily::kp_bosonic, {std::polar(0.5, 0.4)}, bos(1, 2), 40));
  ASSERT_TRUE(ir.decomposition);
  EXPECT_LE(ir.decomposition->relative_residual, 1e-10);
  EXPECT_LE(ir.rs.gap, 1e-10);
  EXPECT_TRUE(ir.checks.pass());
}
