#ifndef ARSTAT_COHERENT_HPP
#define ARSTAT_COHERENT_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "arstat/bargmann.hpp"
#include "arstat/combinatorics.hpp"
#include "arstat/fock.hpp"
#include "arstat/linalg.hpp"
#include "arstat/params.hpp"
#include "arstat/report.hpp"

namespace arstat {

enum class CoherentFamily { gk, kp_bosonic, kp_fermionic };

inline std::string_view family_name(CoherentFamily f) {
  switch (f) {
    case CoherentFamily::gk: return "gk";
    case CoherentFamily::kp_bosonic: return "kp-bosonic";
    case CoherentFamily::kp_fermionic: return "kp-fermionic";
  }
  return "?";
}

inline CoherentFamily family_from_name(std::string_view name) {
  if (name == "gk") return CoherentFamily::gk;
  if (name == "kp-bosonic" || name == "kpb") return CoherentFamily::kp_bosonic;
  if (name == "kp-fermionic" || name == "kpf") return CoherentFamily::kp_fermionic;
  throw ParameterError("unknown coherent-state family: " + std::string(name));
}

inline Realization family_realization(CoherentFamily f) {
  switch (f) {
    case CoherentFamily::gk: return Realization::gk_omega;
    case CoherentFamily::kp_bosonic: return Realization::kp_bosonic_z;
    case CoherentFamily::kp_fermionic: return Realization::kp_fermionic_zeta;
  }
  return Realization::gk_omega;
}

inline double label_norm_sq(const std::vector<Complex>& label) {
  double rho = 0.0;
  for (const auto& c : label) rho += std::norm(c);
  return rho;
}

/// Family, label (omega, z or zeta) and representation. `cutoff` is only used
/// on the bosonic branch; when absent it is chosen automatically.
struct CoherentStateSpec {
  CoherentFamily family;
  std::vector<Complex> label;
  StatisticsParams params;
  std::optional<int> cutoff;

  CoherentStateSpec(CoherentFamily f, std::vector<Complex> l, StatisticsParams p, std::optional<int> c = std::nullopt)
      : family(f), label(std::move(l)), params(p), cutoff(c) {
    validate();
  }

  void validate() const {
    require_compatible(family_realization(family), params);
    if (static_cast<int>(label.size()) != params.r()) throw ParameterError("label must have r components");
    for (const auto& c : label)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw DomainError("label components must be finite");
    if (family == CoherentFamily::kp_bosonic && label_norm_sq(label) >= 1.0) {
      std::ostringstream msg;
      msg << "kp-bosonic label outside the unit ball: sum |z_i|^2 = " << label_norm_sq(label) << " >= 1";
      throw DomainError(msg.str());
    }
    if (cutoff && *cutoff < 0) throw ParameterError("cutoff must be non-negative");
  }
};

/// Contribution of the shell |n| = m to the squared norm of the unnormalized
/// expansion, as a logarithm; rho = sum |label_i|^2.
///   GK:         (k-1)! rho^m / (m! (k-1+m)!)
///   KP bosonic: (k-1+m)! / ((k-1)! m!) rho^m
inline double log_shell_weight(CoherentFamily f, int k, double rho, int m) {
  const double lr = m == 0 ? 0.0 : m * std::log(rho);
  switch (f) {
    case CoherentFamily::gk: return log_factorial(k - 1) - log_factorial(m) - log_factorial(k - 1 + m) + lr;
    case CoherentFamily::kp_bosonic: return log_factorial(k - 1 + m) - log_factorial(k - 1) - log_factorial(m) + lr;
    case CoherentFamily::kp_fermionic:
      return log_factorial(k - 1) - log_factorial(m) - log_factorial(k - 1 - m) + lr;
  }
  return 0.0;
}

struct CutoffChoice {
  int cutoff = 0;
  double tail_estimate = 0.0;  ///< upper bound on the dropped part of N^2, relative to the kept part
};

/// Smallest cutoff whose next shell contributes less than `rel` of the
/// partial sum while the shell weights are already decreasing. Shell ratios
/// decrease monotonically in both bosonic families, so the dropped tail is
/// bounded by a geometric series.
inline CutoffChoice auto_cutoff(const CoherentStateSpec& spec, double rel = 1e-14, int min_cutoff = 2,
                                int max_dimension = 60000) {
  const auto& p = spec.params;
  if (p.fermionic()) return {p.pauli_bound(), 0.0};
  const double rho = label_norm_sq(spec.label);
  if (rho == 0.0) return {min_cutoff, 0.0};
  const int k = p.k();
  double partial = 0.0;
  for (int c = 0;; ++c) {
    partial += std::exp(log_shell_weight(spec.family, k, rho, c));
    if (c >= min_cutoff) {
      const double next = std::exp(log_shell_weight(spec.family, k, rho, c + 1));
      const double ratio = next > 0.0 ? std::exp(log_shell_weight(spec.family, k, rho, c + 2)) / next : 0.0;
      if (next < rel * partial && ratio < 1.0) return {c, next / (1.0 - ratio) / partial};
    }
    if (binomial(c + 1 + p.r(), p.r()) > static_cast<std::uint64_t>(max_dimension))
      throw DomainError("automatic cutoff exceeds the dimension limit; label too close to the domain boundary");
  }
}

/// Truncated coherent state and its normalization data.
struct CoherentState {
  CoherentStateSpec spec;
  int cutoff = 0;
  Vector amplitudes;
  double norm_sq_sum = 0.0;                  ///< sum over the basis of |C_n label^n|^2
  std::optional<double> norm_sq_closed;      ///< closed-form N^2 (KP families)
  double tail_estimate = 0.0;                ///< dropped relative part of N^2 (bosonic)
};

/// Closed-form inverse-square prefactor of the KP families:
/// (1 - rho)^{-k} bosonic and (1 + rho)^{k-1} fermionic.
inline double kp_closed_norm_sq(const CoherentStateSpec& spec) {
  const double rho = label_norm_sq(spec.label);
  const int k = spec.params.k();
  if (spec.family == CoherentFamily::kp_bosonic) return std::pow(1.0 - rho, -static_cast<double>(k));
  if (spec.family == CoherentFamily::kp_fermionic) return std::pow(1.0 + rho, k - 1);
  throw ParameterError("closed-form normalization exists only for KP families");
}

namespace detail {
inline Complex label_power(const std::vector<Complex>& label, const MultiIndex& n) {
  Complex v = 1.0;
  for (int i = 0; i < n.size(); ++i)
    if (n[i] > 0) v *= std::pow(label[static_cast<std::size_t>(i)], n[i]);
  return v;
}
}  // namespace detail

/// Coherent state on `basis`: amplitude on |n> is N^{-1} C_{k;n} prod label_i^{n_i}.
/// GK uses the truncated sum for N^2, so the vector has unit norm exactly. The
/// KP families use the closed forms (1 - rho)^{k/2} and (1 + rho)^{-(k-1)/2} as
/// multiplicative prefactors; the truncated bosonic vector then falls short of
/// unit norm by the dropped tail.
inline CoherentState build_state(const CoherentStateSpec& spec, const FockBasis& basis) {
  spec.validate();
  if (basis.params() != spec.params) throw ParameterError("basis parameters differ from the state parameters");
  const Realization real = family_realization(spec.family);
  CoherentState st{spec, basis.cutoff()};
  st.amplitudes = Vector::Zero(basis.dimension());
  for (Eigen::Index p = 0; p < basis.dimension(); ++p) {
    const MultiIndex& n = basis.index(p);
    st.amplitudes(p) = bargmann_coefficient(real, spec.params, n) * detail::label_power(spec.label, n);
  }
  st.norm_sq_sum = st.amplitudes.squaredNorm();
  if (spec.family == CoherentFamily::gk) {
    st.amplitudes /= std::sqrt(st.norm_sq_sum);
  } else {
    st.norm_sq_closed = kp_closed_norm_sq(spec);
    st.amplitudes /= std::sqrt(*st.norm_sq_closed);
  }
  if (basis.truncated()) {
    const double rho = label_norm_sq(spec.label);
    if (rho > 0.0) {
      const int c = basis.cutoff();
      const double next = std::exp(log_shell_weight(spec.family, spec.params.k(), rho, c + 1));
      const double ratio = std::exp(log_shell_weight(spec.family, spec.params.k(), rho, c + 2)) / next;
      st.tail_estimate = ratio < 1.0 ? next / (1.0 - ratio) / st.norm_sq_sum : std::numeric_limits<double>::infinity();
    }
  }
  return st;
}

/// Basis for a spec: explicit cutoff if given, else automatic.
inline FockBasis coherent_basis(const CoherentStateSpec& spec) {
  if (spec.params.fermionic()) return enumerate_basis(spec.params, 0);
  return enumerate_basis(spec.params, spec.cutoff ? *spec.cutoff : auto_cutoff(spec).cutoff);
}

inline CoherentState build_state(const CoherentStateSpec& spec) { return build_state(spec, coherent_basis(spec)); }

/// max_i || a_i^- psi - omega_i psi || over rows below the top truncation shell.
inline double gk_eigen_residual(const Vector& state, const LadderSet& ladder, const std::vector<Complex>& omega) {
  if (static_cast<int>(omega.size()) != ladder.r()) throw ParameterError("omega must have r components");
  if (state.size() != ladder.dimension()) throw ParameterError("state dimension differs from the ladder dimension");
  const auto& basis = ladder.basis();
  const Eigen::Index rows = basis.truncated() ? basis.dimension_up_to(basis.cutoff() - 1) : basis.dimension();
  double worst = 0.0;
  for (int i = 0; i < ladder.r(); ++i) {
    const Vector diff = ladder.lowering(i) * state - omega[static_cast<std::size_t>(i)] * state;
    worst = std::max(worst, diff.head(rows).norm());
  }
  return worst;
}

/// Phase rule for the bosonic displacement parameters with r >= 2.
enum class PhaseConvention {
  /// phase(eta_1) = phase(z_1), phase(eta_i) = phase(z_i) / phase(z_{i-1}).
  cumulative,
  /// phase(eta_i) = phase(z_i) for every i, the printed rule.
  as_printed,
};

struct DisplacementParams {
  CoherentFamily family;
  std::vector<Complex> eta;
  PhaseConvention convention = PhaseConvention::cumulative;
};

namespace detail {
inline Complex unit_phase(Complex c) {
  const double m = std::abs(c);
  return m == 0.0 ? Complex(1.0, 0.0) : c / m;
}

/// tail_i = sum_{j >= i} |label_j|^2.
inline std::vector<double> label_tails(const std::vector<Complex>& label) {
  std::vector<double> tail(label.size() + 1, 0.0);
  for (std::size_t i = label.size(); i-- > 0;) tail[i] = tail[i + 1] + std::norm(label[i]);
  return tail;
}
}  // namespace detail

/// Displacement parameters eta (bosonic) or eta' (fermionic) reproducing the
/// coherent state with the given label through D(eta_r)...D(eta_1)|0>.
///
/// Bosonic: tanh|eta_1| = |z|, tan^2|eta_i| = |z_{i-1}|^{-2} sum_{j>=i} |z_j|^2.
/// Fermionic: the system zeta_i = Z_1...Z_i is solved for Z_i = zeta_i/zeta_{i-1},
/// then back-substituted from Z_r: tan|eta'_r| = |Z_r|, tan|eta'_j| = |Z_j| / cos|eta'_{j+1}|.
inline DisplacementParams displacement_params_from_label(CoherentFamily family, const std::vector<Complex>& label,
                                                         PhaseConvention convention = PhaseConvention::cumulative) {
  if (family == CoherentFamily::gk) throw ParameterError("GK states have no displacement-operator form");
  const std::size_t r = label.size();
  if (r == 0) throw ParameterError("label must be non-empty");
  const auto tail = detail::label_tails(label);
  DisplacementParams dp{family, std::vector<Complex>(r), convention};
  for (std::size_t i = 1; i < r; ++i)
    if (label[i - 1] == Complex(0.0) && tail[i] > 0.0)
      throw DomainError("label component " + std::to_string(i) + " vanishes while later components do not; eta_" +
                        std::to_string(i + 1) + " is singular");

  if (family == CoherentFamily::kp_bosonic) {
    const double rho = tail[0];
    if (rho >= 1.0) throw DomainError("kp-bosonic label outside the unit ball");
    dp.eta[0] = std::atanh(std::sqrt(rho)) * detail::unit_phase(label[0]);
    for (std::size_t i = 1; i < r; ++i) {
      if (tail[i] == 0.0) continue;
      const double mag = std::atan(std::sqrt(tail[i]) / std::abs(label[i - 1]));
      Complex phase = detail::unit_phase(label[i]);
      if (convention == PhaseConvention::cumulative) phase *= std::conj(detail::unit_phase(label[i - 1]));
      dp.eta[i] = mag * phase;
    }
    return dp;
  }

  // Fermionic: Z_i = zeta_i / zeta_{i-1} (zeta_0 = 1), then back-substitution.
  std::vector<Complex> z(r, Complex(0.0));
  for (std::size_t i = 0; i < r; ++i) {
    if (i == 0) z[i] = label[0];
    else if (tail[i] > 0.0) z[i] = label[i] / label[i - 1];
  }
  double cos_next = 1.0;
  for (std::size_t i = r; i-- > 0;) {
    const double mag = std::atan(std::abs(z[i]) / cos_next);
    dp.eta[i] = mag * detail::unit_phase(z[i]);
    cos_next = std::cos(mag);
  }
  return dp;
}

/// Label reconstructed from displacement parameters. Bosonic uses the rotation
/// picture; fermionic uses the product formula zeta_i = Z_1...Z_i with
/// Z_j = phase(eta'_j) tan|eta'_j| cos|eta'_{j+1}| and Z_r = phase(eta'_r) tan|eta'_r|.
inline std::vector<Complex> label_from_displacement(const DisplacementParams& dp) {
  const std::size_t r = dp.eta.size();
  std::vector<Complex> label(r, Complex(0.0));
  if (dp.family == CoherentFamily::kp_fermionic) {
    Complex prod = 1.0;
    for (std::size_t j = 0; j < r; ++j) {
      const double mag = std::abs(dp.eta[j]);
      const double cos_next = j + 1 < r ? std::cos(std::abs(dp.eta[j + 1])) : 1.0;
      prod *= detail::unit_phase(dp.eta[j]) * std::tan(mag) * cos_next;
      label[j] = prod;
    }
    return label;
  }
  if (dp.family != CoherentFamily::kp_bosonic) throw ParameterError("GK states have no displacement-operator form");
  // D(eta_1) gives (phase tanh|eta_1|, 0, ...); D(eta_i) then rotates weight from slot i-1 into slot i.
  label[0] = std::tanh(std::abs(dp.eta[0])) * detail::unit_phase(dp.eta[0]);
  for (std::size_t i = 1; i < r; ++i) {
    const double mag = std::abs(dp.eta[i]);
    const Complex prev = label[i - 1];
    Complex phase = detail::unit_phase(dp.eta[i]);
    if (dp.convention == PhaseConvention::as_printed) {
      label[i] = std::sin(mag) * std::abs(prev) * phase;
    } else {
      label[i] = std::sin(mag) * prev * phase;
    }
    label[i - 1] = std::cos(mag) * prev;
  }
  return label;
}

/// Anti-hermitian generators:
///   G_1 = eta_1 a_1^+ - conj(eta_1) a_1^-
///   bosonic   G_i = eta_i [a_{i-1}^-, a_i^+] - conj(eta_i) [a_i^-, a_{i-1}^+]
///   fermionic G_i = eta'_i [a_i^+, a_{i-1}^-] - conj(eta'_i) [a_{i-1}^+, a_i^-]
/// Commutators are exact compressions, so they preserve each shell exactly.
inline std::vector<Matrix> displacement_generators(const DisplacementParams& dp, const LadderSet& ladder) {
  const int r = ladder.r();
  if (static_cast<int>(dp.eta.size()) != r) throw ParameterError("eta must have r components");
  std::vector<Matrix> gens;
  gens.reserve(static_cast<std::size_t>(r));
  const Complex e1 = dp.eta[0];
  gens.push_back(e1 * ladder.raising(0) - std::conj(e1) * ladder.lowering(0));
  for (int i = 1; i < r; ++i) {
    const Complex e = dp.eta[static_cast<std::size_t>(i)];
    // [a_{i-1}^-, a_i^+] and [a_i^-, a_{i-1}^+]
    const Matrix lr = ladder.commutator_lr(i - 1, i);
    const Matrix rl = ladder.commutator_lr(i, i - 1);
    if (dp.family == CoherentFamily::kp_fermionic) gens.push_back(-e * lr + std::conj(e) * rl);
    else gens.push_back(e * lr - std::conj(e) * rl);
  }
  return gens;
}

/// D = exp(G_r) ... exp(G_2) exp(G_1).
inline Matrix displacement_operator(const std::vector<Matrix>& generators) {
  if (generators.empty()) throw ParameterError("no generators");
  Matrix d = expm(generators.front());
  for (std::size_t i = 1; i < generators.size(); ++i) d = expm(generators[i]) * d;
  return d;
}

namespace detail {
using Terms = std::vector<std::pair<Complex, MultiIndex>>;

/// Appends c * second(first(|n>)) when it does not vanish.
inline void push_word(Terms& out, Complex c, const StatisticsParams& p, LadderOp second, LadderOp first,
                      const MultiIndex& n) {
  const auto one = ladder_action(p, first, n);
  if (!one) return;
  const auto two = ladder_action(p, second, one->second);
  if (two) out.emplace_back(c * one->first * two->first, two->second);
}

/// G_i |n> in the untruncated space, with G_i as in displacement_generators.
inline Terms generator_action(const DisplacementParams& dp, const StatisticsParams& p, int i, const MultiIndex& n) {
  Terms out;
  const Complex e = dp.eta[static_cast<std::size_t>(i)];
  if (i == 0) {
    if (const auto up = ladder_action(p, {LadderKind::raise, 0}, n)) out.emplace_back(e * up->first, up->second);
    if (const auto dn = ladder_action(p, {LadderKind::lower, 0}, n)) out.emplace_back(-std::conj(e) * dn->first, dn->second);
    return out;
  }
  const Complex cl = dp.family == CoherentFamily::kp_fermionic ? -e : e;
  const Complex cr = dp.family == CoherentFamily::kp_fermionic ? std::conj(e) : -std::conj(e);
  const LadderOp lo_prev{LadderKind::lower, i - 1}, up_i{LadderKind::raise, i};
  const LadderOp lo_i{LadderKind::lower, i}, up_prev{LadderKind::raise, i - 1};
  // [a_{i-1}^-, a_i^+] and [a_i^-, a_{i-1}^+]
  push_word(out, cl, p, lo_prev, up_i, n);
  push_word(out, -cl, p, up_i, lo_prev, n);
  push_word(out, cr, p, lo_i, up_prev, n);
  push_word(out, -cr, p, up_prev, lo_i, n);
  return out;
}

/// Invariant blocks of G_i on `basis`: G_1 moves only n_1, G_i (i >= 2) keeps
/// n_{i-1} + n_i and every other occupation.
inline std::vector<std::vector<Eigen::Index>> generator_blocks(const FockBasis& basis, int i) {
  std::map<std::vector<int>, std::vector<Eigen::Index>> groups;
  for (Eigen::Index pos = 0; pos < basis.dimension(); ++pos) {
    std::vector<int> key = basis.index(pos).occupations();
    if (i == 0) {
      key[0] = 0;
    } else {
      key[static_cast<std::size_t>(i - 1)] += key[static_cast<std::size_t>(i)];
      key[static_cast<std::size_t>(i)] = 0;
    }
    groups[key].push_back(pos);
  }
  std::vector<std::vector<Eigen::Index>> out;
  out.reserve(groups.size());
  for (auto& [key, g] : groups) out.push_back(std::move(g));
  return out;
}
}  // namespace detail

/// Replaces the rows of `v` (indexed by `basis`) with D v, one invariant block
/// of one factor exp(G_i) at a time. On a truncated basis this is the
/// compression of each factor; with enough padding it matches the untruncated
/// D on the low shells.
inline void apply_displacement(const DisplacementParams& dp, const FockBasis& basis, Matrix& v) {
  const StatisticsParams& p = basis.params();
  if (static_cast<int>(dp.eta.size()) != p.r()) throw ParameterError("eta must have r components");
  if (v.rows() != basis.dimension()) throw ParameterError("vector rows differ from the basis dimension");
  for (int i = 0; i < p.r(); ++i) {
    for (const auto& block : detail::generator_blocks(basis, i)) {
      const auto len = static_cast<Eigen::Index>(block.size());
      std::map<MultiIndex, Eigen::Index> local;
      for (Eigen::Index a = 0; a < len; ++a) local.emplace(basis.index(block[static_cast<std::size_t>(a)]), a);
      Matrix g = Matrix::Zero(len, len);
      for (Eigen::Index b = 0; b < len; ++b)
        for (const auto& [c, m] : detail::generator_action(dp, p, i, basis.index(block[static_cast<std::size_t>(b)])))
          if (const auto it = local.find(m); it != local.end()) g(it->second, b) += c;
      if (g.isZero(0.0)) continue;
      Matrix rows(len, v.cols());
      for (Eigen::Index a = 0; a < len; ++a) rows.row(a) = v.row(block[static_cast<std::size_t>(a)]);
      rows = expm(g) * rows;
      for (Eigen::Index a = 0; a < len; ++a) v.row(block[static_cast<std::size_t>(a)]) = rows.row(a);
    }
  }
}

/// Basis with extra shells beyond `basis`, as many as fit under `max_dimension`
/// up to `want`. Fermionic bases are returned unchanged.
inline FockBasis padded_basis(const FockBasis& basis, int want = 40, std::uint64_t max_dimension = 6000) {
  if (!basis.truncated()) return basis;
  const int r = basis.params().r();
  int pad = std::max(want, basis.cutoff());
  while (pad > 0 && binomial(basis.cutoff() + pad + r, r) > max_dimension) --pad;
  return FockBasis(basis.params(), basis.cutoff() + pad);
}

/// Columns D|n> for the first `cols` states of `basis`, with rows in the padded
/// basis `wide` (which must extend `basis` in graded order).
inline Matrix displacement_columns(const DisplacementParams& dp, const FockBasis& wide, Eigen::Index cols) {
  Matrix v = Matrix::Identity(wide.dimension(), cols);
  apply_displacement(dp, wide, v);
  return v;
}

/// D on the states of `ladder`. Truncated bases are padded so that the result
/// is the compression of the untruncated D up to the padding error.
inline Matrix displacement_operator(const DisplacementParams& dp, const LadderSet& ladder) {
  if (!ladder.basis().truncated()) return displacement_operator(displacement_generators(dp, ladder));
  const Eigen::Index dim = ladder.dimension();
  return displacement_columns(dp, padded_basis(ladder.basis()), dim).topRows(dim);
}

struct DisplacementCheck {
  ResidualReport report;
  double raw_residual = 0.0;
  double aligned_residual = 0.0;
  double global_phase = 0.0;  ///< arg <state | D|0>>
  DisplacementParams params;
  std::string ordering = "D(eta_r)...D(eta_2)D(eta_1)|0>";
};

/// Compares D|0> with the coherent state built from the expansion, both raw and
/// after removing the global phase.
inline DisplacementCheck verify_displacement(const CoherentStateSpec& spec, const LadderSet& ladder,
                                             double tolerance = 1e-8,
                                             PhaseConvention convention = PhaseConvention::cumulative) {
  if (spec.family == CoherentFamily::gk) throw ParameterError("GK states have no displacement-operator form");
  const CoherentState st = build_state(spec, ladder.basis());
  DisplacementCheck out{ResidualReport("displacement " + std::string(family_name(spec.family))), 0.0, 0.0, 0.0,
                        displacement_params_from_label(spec.family, spec.label, convention)};
  const auto gens = displacement_generators(out.params, ladder);
  double anti = 0.0;
  for (const auto& g : gens) anti = std::max(anti, (g + g.adjoint()).norm() / std::max(1.0, g.norm()));
  out.report.add("generators anti-hermitian", anti, 1e-14);

  const Vector image = displacement_columns(out.params, padded_basis(ladder.basis()), 1).col(0).head(ladder.dimension());
  const Complex overlap = st.amplitudes.dot(image);
  out.global_phase = std::arg(overlap);
  out.raw_residual = (image - st.amplitudes).norm();
  out.aligned_residual = (image - std::polar(1.0, out.global_phase) * st.amplitudes).norm();
  out.report.add("displacement ||D|0> - e^{i phi} |coh>||", out.aligned_residual, tolerance);
  out.report.note("ordering " + out.ordering);
  std::ostringstream msg;
  msg << "raw residual " << out.raw_residual << ", extracted phase " << out.global_phase;
  out.report.note(msg.str());
  return out;
}

/// Direct sum of |C_n label^n|^2 against the KP closed forms, as a relative error.
inline double kp_normalization_mismatch(const CoherentStateSpec& spec, const FockBasis& basis) {
  const CoherentState st = build_state(spec, basis);
  return std::abs(st.norm_sq_sum - *st.norm_sq_closed) / *st.norm_sq_closed;
}

}  // namespace arstat

#endif  // ARSTAT_COHERENT_HPP
