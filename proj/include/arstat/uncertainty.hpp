#ifndef ARSTAT_UNCERTAINTY_HPP
#define ARSTAT_UNCERTAINTY_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "arstat/algebra.hpp"
#include "arstat/coherent.hpp"
#include "arstat/fock.hpp"
#include "arstat/linalg.hpp"
#include "arstat/report.hpp"

namespace arstat {

enum class QuadratureProvenance { canonical, transformed };

inline std::string_view provenance_name(QuadratureProvenance p) {
  return p == QuadratureProvenance::canonical ? "canonical" : "transformed";
}

/// 2r hermitian observables. For the transformed set, `transform` is the
/// 2r x 2r matrix T = U Omega^{-1} with X = T A, and `a_ops` holds A.
struct QuadratureSet {
  std::vector<Matrix> ops;
  QuadratureProvenance provenance = QuadratureProvenance::canonical;
  std::optional<Matrix> u, v;
  std::optional<Matrix> transform;
  std::vector<Matrix> a_ops;
};

/// U = (1/2) [[1, 1], [-i, i]] (r x r blocks), mapping (a^-, a^+) to X.
inline Matrix quadrature_u(int r) {
  const Eigen::Index n = r;
  Matrix u = Matrix::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    u(i, i) = 0.5;
    u(i, i + n) = 0.5;
    u(i + n, i) = Complex(0.0, -0.5);
    u(i + n, i + n) = Complex(0.0, 0.5);
  }
  return u;
}

/// (a_1^-, ..., a_r^-, a_1^+, ..., a_r^+).
inline std::vector<Matrix> ladder_vector(const LadderSet& ladder) {
  std::vector<Matrix> a;
  for (int i = 0; i < ladder.r(); ++i) a.push_back(ladder.lowering(i));
  for (int i = 0; i < ladder.r(); ++i) a.push_back(ladder.raising(i));
  return a;
}

/// Linear combination out_alpha = sum_beta t(alpha, beta) in_beta.
inline std::vector<Matrix> combine(const Matrix& t, const std::vector<Matrix>& in) {
  std::vector<Matrix> out;
  for (Eigen::Index a = 0; a < t.rows(); ++a) {
    Matrix m = Matrix::Zero(in.front().rows(), in.front().cols());
    for (Eigen::Index b = 0; b < t.cols(); ++b)
      if (t(a, b) != Complex(0.0)) m += t(a, b) * in[static_cast<std::size_t>(b)];
    out.push_back(std::move(m));
  }
  return out;
}

/// X_i = (a_i^+ + a_i^-)/2, X_{i+r} = (i/2)(a_i^+ - a_i^-).
inline QuadratureSet canonical_quadratures(const LadderSet& ladder) {
  QuadratureSet q;
  q.a_ops = ladder_vector(ladder);
  q.ops = combine(quadrature_u(ladder.r()), q.a_ops);
  for (auto& x : q.ops) x = 0.5 * (x + x.adjoint()).eval();
  return q;
}

/// Omega = [[u, v], [conj(v), conj(u)]], mapping (a^-, a^+) to (A^-, A^+).
inline Matrix omega_matrix(const Matrix& u, const Matrix& v) {
  const Eigen::Index n = u.rows();
  Matrix om(2 * n, 2 * n);
  om << u, v, v.conjugate(), u.conjugate();
  return om;
}

/// A_i^- = u_ij a_j^- + v_ij a_j^+ with A_i^+ its adjoint, and X = U Omega^{-1} A.
inline QuadratureSet intelligent_quadratures(const Matrix& u, const Matrix& v, const LadderSet& ladder) {
  const int r = ladder.r();
  if (u.rows() != r || u.cols() != r || v.rows() != r || v.cols() != r)
    throw ParameterError("u and v must be r x r");
  const Matrix om = omega_matrix(u, v);
  Eigen::FullPivLU<Matrix> lu(om);
  if (!lu.isInvertible()) throw DomainError("Omega = [[u, v], [v*, u*]] is singular");
  QuadratureSet q;
  q.provenance = QuadratureProvenance::transformed;
  q.u = u;
  q.v = v;
  q.a_ops = combine(om, ladder_vector(ladder));
  q.transform = quadrature_u(r) * lu.inverse();
  q.ops = combine(*q.transform, q.a_ops);
  for (auto& x : q.ops) x = 0.5 * (x + x.adjoint()).eval();
  return q;
}

struct MomentMatrices {
  RealMatrix sigma;
  RealMatrix commutator;
  double max_imaginary = 0.0;  ///< largest discarded imaginary part
};

struct ComplexMomentMatrices {
  Matrix sigma;
  Matrix commutator;
};

inline void require_normalized(const Vector& state, double tol = 1e-8) {
  if (std::abs(state.norm() - 1.0) > tol) throw ParameterError("state is not normalized");
}

/// sigma = (1/2)<{A_a, A_b}> - <A_a><A_b>, C = <-(i/2)[A_a, A_b]> for arbitrary operators.
inline ComplexMomentMatrices complex_moment_matrices(const Vector& state, const std::vector<Matrix>& ops) {
  require_normalized(state);
  const auto n = static_cast<Eigen::Index>(ops.size());
  std::vector<Vector> images;
  std::vector<Complex> means;
  for (const auto& op : ops) {
    images.push_back(op * state);
    means.push_back(state.dot(images.back()));
  }
  // <A_a A_b> = <A_a^dag psi | A_b psi>.
  std::vector<Vector> adj_images;
  for (const auto& op : ops) adj_images.push_back(op.adjoint() * state);
  ComplexMomentMatrices m{Matrix(n, n), Matrix(n, n)};
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      const Complex ab = adj_images[static_cast<std::size_t>(a)].dot(images[static_cast<std::size_t>(b)]);
      const Complex ba = adj_images[static_cast<std::size_t>(b)].dot(images[static_cast<std::size_t>(a)]);
      m.sigma(a, b) = 0.5 * (ab + ba) - means[static_cast<std::size_t>(a)] * means[static_cast<std::size_t>(b)];
      m.commutator(a, b) = Complex(0.0, -0.5) * (ab - ba);
    }
  }
  return m;
}

/// Real covariance and mean-commutator matrices of hermitian observables.
inline MomentMatrices moment_matrices(const Vector& state, const QuadratureSet& quads) {
  const auto c = complex_moment_matrices(state, quads.ops);
  MomentMatrices m{c.sigma.real(), c.commutator.real()};
  m.max_imaginary = std::max(c.sigma.imag().cwiseAbs().maxCoeff(), c.commutator.imag().cwiseAbs().maxCoeff());
  // Symmetrize away rounding.
  m.sigma = 0.5 * (m.sigma + m.sigma.transpose()).eval();
  m.commutator = 0.5 * (m.commutator - m.commutator.transpose()).eval();
  return m;
}

struct RSReport {
  double det_sigma = 0.0;
  double det_c = 0.0;
  double gap = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool robertson_holds = false;  ///< det sigma >= det C - tolerance * max(|det sigma|, floor)
  double min_sigma_eigenvalue = 0.0;
  double max_imaginary = 0.0;
};

inline constexpr double kDeterminantFloor = 1e-30;

/// Robertson-Schroedinger equality test: gap = |det sigma - det C| / max(|det sigma|, 1e-30).
inline RSReport check_rs_minimization(const MomentMatrices& m, double tolerance = 1e-8) {
  RSReport rep;
  rep.det_sigma = m.sigma.determinant();
  rep.det_c = m.commutator.determinant();
  const double scale = std::max(std::abs(rep.det_sigma), kDeterminantFloor);
  rep.gap = std::abs(rep.det_sigma - rep.det_c) / scale;
  rep.tolerance = tolerance;
  rep.pass = rep.gap <= tolerance;
  rep.robertson_holds = rep.det_sigma >= rep.det_c - tolerance * scale;
  Eigen::SelfAdjointEigenSolver<RealMatrix> eig(m.sigma, Eigen::EigenvaluesOnly);
  rep.min_sigma_eigenvalue = eig.eigenvalues().minCoeff();
  rep.max_imaginary = m.max_imaginary;
  return rep;
}

inline RSReport check_rs_minimization(const Vector& state, const QuadratureSet& quads, double tolerance = 1e-8) {
  return check_rs_minimization(moment_matrices(state, quads), tolerance);
}

/// Relations between sigma(A) and C(A) implied by A_i^- |psi> = lambda_i |psi>:
/// sigma_ij = C_ij = sigma_{i+r,j+r} = C_{i+r,j+r} = 0,
/// sigma_{i,j+r} = i C_{i,j+r}, sigma_{i+r,j} = -i C_{i+r,j}.
inline ResidualReport element_relations_check(const Vector& state, const std::vector<Matrix>& a_ops,
                                              double tolerance = 1e-9) {
  const auto r = static_cast<Eigen::Index>(a_ops.size() / 2);
  const auto m = complex_moment_matrices(state, a_ops);
  ResidualReport rep("element relations");
  double s_ll = 0, c_ll = 0, s_rr = 0, c_rr = 0, s_lr = 0, s_rl = 0;
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) {
      s_ll = std::max(s_ll, std::abs(m.sigma(i, j)));
      c_ll = std::max(c_ll, std::abs(m.commutator(i, j)));
      s_rr = std::max(s_rr, std::abs(m.sigma(i + r, j + r)));
      c_rr = std::max(c_rr, std::abs(m.commutator(i + r, j + r)));
      s_lr = std::max(s_lr, std::abs(m.sigma(i, j + r) - kI * m.commutator(i, j + r)));
      s_rl = std::max(s_rl, std::abs(m.sigma(i + r, j) + kI * m.commutator(i + r, j)));
    }
  }
  rep.add("sigma_ij", s_ll, tolerance);
  rep.add("C_ij", c_ll, tolerance);
  rep.add("sigma_{i+r,j+r}", s_rr, tolerance);
  rep.add("C_{i+r,j+r}", c_rr, tolerance);
  rep.add("sigma_{i,j+r} - i C_{i,j+r}", s_lr, tolerance);
  rep.add("sigma_{i+r,j} + i C_{i+r,j}", s_rl, tolerance);
  return rep;
}

inline ResidualReport element_relations_check(const Vector& state, const LadderSet& ladder, double tolerance = 1e-9) {
  return element_relations_check(state, ladder_vector(ladder), tolerance);
}

/// sigma(X) and C(X) computed directly against T sigma(A) T^T and T C(A) T^T.
inline ResidualReport transformation_consistency(const Vector& state, const QuadratureSet& quads,
                                                 double tolerance = 1e-10) {
  if (!quads.transform && quads.provenance == QuadratureProvenance::transformed)
    throw ParameterError("transformed quadrature set lacks its transform");
  const Matrix t = quads.transform ? *quads.transform : quadrature_u(static_cast<int>(quads.ops.size() / 2));
  const auto direct = complex_moment_matrices(state, quads.ops);
  const auto via_a = complex_moment_matrices(state, quads.a_ops);
  const Matrix sig = t * via_a.sigma * t.transpose();
  const Matrix com = t * via_a.commutator * t.transpose();
  ResidualReport rep("transformation consistency");
  const double s_scale = std::max(1.0, direct.sigma.norm());
  const double c_scale = std::max(1.0, direct.commutator.norm());
  rep.add("sigma(X) - T sigma(A) T^T", (direct.sigma - sig).norm() / s_scale, tolerance);
  rep.add("C(X) - T C(A) T^T", (direct.commutator - com).norm() / c_scale, tolerance);
  return rep;
}

/// Moments of ladder products need one shell beyond the state's support, so
/// bosonic moments are taken in a basis one shell larger than the state's.
inline FockBasis moment_basis(const FockBasis& state_basis) {
  if (!state_basis.truncated()) return state_basis;
  return FockBasis(state_basis.params(), state_basis.cutoff() + 1);
}

/// Fit of D^dag a_i^+ D = x_ij a_j^- + y_ij a_j^+ + z_ijk [a_j^-, a_k^+].
struct CreatorDecomposition {
  Matrix x, y;
  std::vector<Complex> z;  ///< z[(i r + j) r + k]
  double residual = 0.0;   ///< Frobenius norm of the misfit over all i
  double relative_residual = 0.0;
  int gram_rank = 0;
  bool rank_deficient = false;
  Eigen::Index fitted_dimension = 0;

  Complex zc(int r, int i, int j, int k) const { return z[static_cast<std::size_t>((i * r + j) * r + k)]; }
};

/// Least-squares decomposition of D^dag a_i^+ D in the operator basis
/// {a_j^-, a_j^+, [a_j^-, a_k^+]}: the Gram system of the flattened matrices
/// is solved directly. On a truncated basis only the leading block of
/// dimension `block` enters the fit.
/// `targets[i]` is the leading block of D^dag a_i^+ D; its size fixes the block.
inline CreatorDecomposition fit_transformed_creator(const std::vector<Matrix>& targets, const LadderSet& ladder) {
  const int r = ladder.r();
  if (static_cast<int>(targets.size()) != r) throw ParameterError("need one target per mode");
  const Eigen::Index b = targets.front().rows();
  if (b > ladder.dimension()) throw ParameterError("target block exceeds the ladder dimension");

  std::vector<Matrix> basis;
  for (int j = 0; j < r; ++j) basis.push_back(ladder.lowering(j).topLeftCorner(b, b));
  for (int j = 0; j < r; ++j) basis.push_back(ladder.raising(j).topLeftCorner(b, b));
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) basis.push_back(ladder.commutator_lr(j, k).topLeftCorner(b, b));
  const auto nb = static_cast<Eigen::Index>(basis.size());

  Matrix gram(nb, nb);
  for (Eigen::Index p = 0; p < nb; ++p)
    for (Eigen::Index q = 0; q < nb; ++q)
      gram(p, q) = (basis[static_cast<std::size_t>(p)].adjoint() * basis[static_cast<std::size_t>(q)]).trace();
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(gram);
  cod.setThreshold(1e-12);

  CreatorDecomposition out;
  out.x = Matrix::Zero(r, r);
  out.y = Matrix::Zero(r, r);
  out.z.assign(static_cast<std::size_t>(r * r * r), Complex(0.0));
  out.gram_rank = static_cast<int>(cod.rank());
  out.rank_deficient = cod.rank() < nb;
  out.fitted_dimension = b;

  double misfit = 0.0, target_norm = 0.0;
  for (int i = 0; i < r; ++i) {
    const Matrix& target = targets[static_cast<std::size_t>(i)];
    Vector rhs(nb);
    for (Eigen::Index p = 0; p < nb; ++p) rhs(p) = (basis[static_cast<std::size_t>(p)].adjoint() * target).trace();
    const Vector c = cod.solve(rhs);
    Matrix fit = Matrix::Zero(b, b);
    for (Eigen::Index p = 0; p < nb; ++p) fit += c(p) * basis[static_cast<std::size_t>(p)];
    misfit += (target - fit).squaredNorm();
    target_norm += target.squaredNorm();
    for (int j = 0; j < r; ++j) {
      out.x(i, j) = c(j);
      out.y(i, j) = c(r + j);
      for (int k = 0; k < r; ++k) out.z[static_cast<std::size_t>((i * r + j) * r + k)] = c(2 * r + j * r + k);
    }
  }
  out.residual = std::sqrt(misfit);
  out.relative_residual = out.residual / std::max(1e-300, std::sqrt(target_norm));
  return out;
}

inline CreatorDecomposition decompose_transformed_creator(const Matrix& d, const LadderSet& ladder,
                                                          std::optional<Eigen::Index> block = std::nullopt) {
  const Eigen::Index dim = ladder.dimension();
  if (d.rows() != dim || d.cols() != dim) throw ParameterError("displacement dimension differs from the ladder");
  const Eigen::Index b = block ? std::min(*block, dim) : dim;
  std::vector<Matrix> targets;
  for (int i = 0; i < ladder.r(); ++i) targets.push_back((d.adjoint() * ladder.raising(i) * d).topLeftCorner(b, b));
  return fit_transformed_creator(targets, ladder);
}

/// a_i^+ applied to the rows of `v` (indexed by `basis`); components leaving the basis are dropped.
inline Matrix apply_raising(const FockBasis& basis, int i, const Matrix& v) {
  Matrix out = Matrix::Zero(v.rows(), v.cols());
  for (Eigen::Index pos = 0; pos < basis.dimension(); ++pos)
    if (const auto up = ladder_action(basis.params(), {LadderKind::raise, i}, basis.index(pos)))
      if (const auto to = basis.position(up->second)) out.row(*to) += up->first * v.row(pos);
  return out;
}

/// Decomposition from the padded columns D|n> of the leading `block` states,
/// so the target is free of the truncation of intermediate sums.
inline CreatorDecomposition decompose_displacement(const DisplacementParams& dp, const LadderSet& ladder,
                                                   Eigen::Index block) {
  const FockBasis wide = padded_basis(ladder.basis());
  const Matrix cols = displacement_columns(dp, wide, std::min(block, ladder.dimension()));
  std::vector<Matrix> targets;
  for (int i = 0; i < ladder.r(); ++i) targets.push_back(cols.adjoint() * apply_raising(wide, i, cols));
  return fit_transformed_creator(targets, ladder);
}

/// Coefficients (u, v) making D|0> an eigenstate of A^- = u a^- + v a^+, and the eigenvalues.
///
/// With D^dag a^+ D = x a^- + y a^+ + z [a^-, a^+], the adjoint gives
/// D^dag a^- D = conj(y) a^- + conj(x) a^+ + conj(z_ikj) [a_j^-, a_k^+]. The a^+
/// component of D^dag A^- D |0> vanishes when u conj(x) + v y = 0; we take
/// u = 1 and v = -conj(x) y^{-1}. Then
///   lambda_i = (k0 + s) sum_{j,l} (u_ij conj(z_jll) + v_ij z_jll).
struct IntelligentCoefficients {
  Matrix u, v;
  std::vector<Complex> lambda;
  double condition_residual = 0.0;  ///< || u conj(x) + v y ||
};

inline IntelligentCoefficients intelligent_coefficients(const CreatorDecomposition& dec, const StatisticsParams& p) {
  const int r = p.r();
  IntelligentCoefficients ic;
  ic.u = Matrix::Identity(r, r);
  Eigen::FullPivLU<Matrix> lu(dec.y);
  if (!lu.isInvertible()) throw DomainError("y coefficient matrix is singular; cannot solve for v");
  ic.v = -dec.x.conjugate() * lu.inverse();
  ic.condition_residual = (ic.u * dec.x.conjugate() + ic.v * dec.y).norm();
  const double vac = p.vacuum_commutator();
  for (int i = 0; i < r; ++i) {
    Complex lam = 0.0;
    for (int j = 0; j < r; ++j)
      for (int l = 0; l < r; ++l) {
        const Complex zjll = dec.zc(r, j, l, l);
        lam += ic.u(i, j) * std::conj(zjll) + ic.v(i, j) * zjll;
      }
    ic.lambda.push_back(vac * lam);
  }
  return ic;
}

/// Full minimum-uncertainty check for one coherent state.
struct IntelligentReport {
  std::string state_spec;
  QuadratureProvenance provenance = QuadratureProvenance::canonical;
  RSReport rs;
  ResidualReport checks;
  std::optional<CreatorDecomposition> decomposition;
  std::optional<IntelligentCoefficients> coefficients;
};

namespace detail {
inline std::string describe(const CoherentStateSpec& spec, int cutoff) {
  std::ostringstream os;
  os << family_name(spec.family) << ' ' << spec.params << " label=(";
  for (std::size_t i = 0; i < spec.label.size(); ++i)
    os << (i ? "," : "") << spec.label[i].real() << (spec.label[i].imag() < 0 ? "" : "+") << spec.label[i].imag() << 'j';
  os << ") cutoff=" << cutoff;
  return os.str();
}

/// Rows of A^- psi - lambda psi that are unaffected by the state's truncation.
inline double eigen_residual(const std::vector<Matrix>& a_ops, const Vector& state, const std::vector<Complex>& lambda,
                             Eigen::Index rows) {
  double worst = 0.0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const Vector diff = a_ops[i] * state - lambda[i] * state;
    worst = std::max(worst, diff.head(rows).norm());
  }
  return worst;
}
}  // namespace detail

/// GK state with canonical quadratures.
inline IntelligentReport gk_uncertainty(const CoherentStateSpec& spec, double tolerance = 1e-8) {
  if (spec.family != CoherentFamily::gk) throw ParameterError("gk_uncertainty requires a GK state");
  const FockBasis basis = coherent_basis(spec);
  const CoherentState st = build_state(spec, basis);
  const LadderSet wide = build_ladder_set(moment_basis(basis));
  const Vector psi = pad(st.amplitudes, wide.dimension());
  const QuadratureSet q = canonical_quadratures(wide);
  IntelligentReport rep{detail::describe(spec, basis.cutoff()), QuadratureProvenance::canonical,
                        check_rs_minimization(psi, q, tolerance), ResidualReport("gk uncertainty")};
  rep.checks.add("det sigma = det C", rep.rs.gap, tolerance, rep.rs.det_sigma, rep.rs.det_c);
  rep.checks.merge(element_relations_check(psi, wide, 1e-9));
  rep.checks.merge(transformation_consistency(psi, q));
  return rep;
}

/// Leading block for the creator fit on a truncated basis. D spreads a shell
/// over many higher ones, so only the lowest shells keep the padding error
/// negligible; four shells already determine every coefficient.
inline Eigen::Index decomposition_block(const FockBasis& basis) {
  if (!basis.truncated()) return basis.dimension();
  return basis.dimension_up_to(std::min(4, basis.cutoff()));
}

/// KP state: displacement operator, creator decomposition, (u, v) from the
/// eigenstate condition, transformed quadratures and the determinant test.
inline IntelligentReport kp_uncertainty(const CoherentStateSpec& spec, double tolerance = 1e-6) {
  if (spec.family == CoherentFamily::gk) throw ParameterError("kp_uncertainty requires a KP state");
  const FockBasis basis = coherent_basis(spec);
  const CoherentState st = build_state(spec, basis);
  const LadderSet ladder = build_ladder_set(basis);
  const DisplacementParams dp = displacement_params_from_label(spec.family, spec.label);
  CreatorDecomposition dec = decompose_displacement(dp, ladder, decomposition_block(basis));
  IntelligentCoefficients ic = intelligent_coefficients(dec, spec.params);

  const LadderSet wide = build_ladder_set(moment_basis(basis));
  Vector psi = pad(st.amplitudes, wide.dimension());
  psi /= psi.norm();
  const QuadratureSet q = intelligent_quadratures(ic.u, ic.v, wide);

  IntelligentReport rep{detail::describe(spec, basis.cutoff()), QuadratureProvenance::transformed,
                        check_rs_minimization(psi, q, tolerance), ResidualReport("kp uncertainty")};
  const double op_scale = std::max(1.0, max_generator_norm(ladder));
  // Exact on the fermionic branch; limited by the truncated exponential otherwise.
  rep.checks.add("creator decomposition residual", dec.relative_residual,
                 spec.params.fermionic() ? 1e-8 : tolerance);
  if (dec.rank_deficient) rep.checks.note("operator basis Gram matrix is rank deficient");
  rep.checks.add("u conj(x) + v y", ic.condition_residual, 1e-10);

  const Eigen::Index rows = basis.truncated() ? basis.dimension_up_to(basis.cutoff() - 1) : basis.dimension();
  std::vector<Matrix> lowers(q.a_ops.begin(), q.a_ops.begin() + spec.params.r());
  rep.checks.add("A^-|coh> = lambda |coh>", detail::eigen_residual(lowers, psi, ic.lambda, rows) / op_scale,
                 tolerance);
  double mean_gap = 0.0;
  for (int i = 0; i < spec.params.r(); ++i)
    mean_gap = std::max(mean_gap, std::abs(psi.dot(lowers[static_cast<std::size_t>(i)] * psi) -
                                           ic.lambda[static_cast<std::size_t>(i)]));
  rep.checks.add("lambda = <coh|A^-|coh>", mean_gap / op_scale, tolerance);
  rep.checks.add("det sigma = det C", rep.rs.gap, tolerance, rep.rs.det_sigma, rep.rs.det_c);
  rep.checks.merge(element_relations_check(psi, q.a_ops, tolerance));
  rep.checks.merge(transformation_consistency(psi, q));
  rep.decomposition = std::move(dec);
  rep.coefficients = std::move(ic);
  return rep;
}

inline IntelligentReport coherent_uncertainty(const CoherentStateSpec& spec, std::optional<double> tolerance = {}) {
  if (spec.family == CoherentFamily::gk) return gk_uncertainty(spec, tolerance.value_or(1e-8));
  return kp_uncertainty(spec, tolerance.value_or(1e-6));
}

}  // namespace arstat

#endif  // ARSTAT_UNCERTAINTY_HPP
