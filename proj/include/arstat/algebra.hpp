#ifndef ARSTAT_ALGEBRA_HPP
#define ARSTAT_ALGEBRA_HPP

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "arstat/combinatorics.hpp"
#include "arstat/fock.hpp"
#include "arstat/report.hpp"

namespace arstat {

/// (k-1+r)! / ((k-1)! r!), the dimension of the fermionic Fock space.
inline std::uint64_t fermionic_dimension(int r, int k) { return binomial(k - 1 + r, r); }

/// Columns on which triple products of truncated matrices are exact: every
/// intermediate state of a cubic word started at total <= cutoff-2 stays in the
/// space. The fermionic space is complete, so all columns qualify.
inline Eigen::Index triple_safe_columns(const FockBasis& basis) {
  if (!basis.truncated()) return basis.dimension();
  return basis.dimension_up_to(basis.cutoff() - 2);
}

inline double max_generator_norm(const LadderSet& ladder) {
  double m = 0.0;
  for (int i = 0; i < ladder.r(); ++i) m = std::max(m, operator_norm(ladder.raising(i)));
  return m;
}

namespace detail {
inline std::string mode_tag(std::initializer_list<int> modes) {
  std::string out = "(";
  bool first = true;
  for (int m : modes) {
    out += (first ? "" : ",") + std::to_string(m + 1);
    first = false;
  }
  return out + ")";
}
}  // namespace detail

/// Residuals of the triple relations
///   [[a_i^+, a_j^-], a_l^+] = -s d_jl a_i^+ - s d_ij a_l^+
///   [[a_i^+, a_j^-], a_l^-] =  s d_il a_j^- + s d_ij a_l^-
/// and of the mutual commutativity of the a^+ and of the a^-. Each residual is
/// the Frobenius norm on the truncation-safe columns divided by
/// max(1, max_i ||a_i^+||)^p, p the degree of the relation.
inline ResidualReport verify_triple_relations(const LadderSet& ladder, double tolerance = 1e-12) {
  const auto& p = ladder.params();
  const int r = p.r();
  const double s = p.s();
  const Eigen::Index cols = triple_safe_columns(ladder.basis());
  const double a = std::max(1.0, max_generator_norm(ladder));
  std::ostringstream subject;
  subject << "triple relations " << p << " cutoff=" << ladder.basis().cutoff();
  ResidualReport report(subject.str());
  if (cols == 0) report.note("cutoff below 2: no truncation-safe columns, triple checks are vacuous");
  if (p.degenerate()) report.note("degenerate representation");

  std::vector<Matrix> mixed(static_cast<std::size_t>(r * r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) mixed[static_cast<std::size_t>(i * r + j)] = commutator(ladder.raising(i), ladder.lowering(j));

  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const Matrix& cij = mixed[static_cast<std::size_t>(i * r + j)];
      for (int l = 0; l < r; ++l) {
        Matrix plus = commutator(cij, ladder.raising(l));
        if (j == l) plus += s * ladder.raising(i);
        if (i == j) plus += s * ladder.raising(l);
        report.add("[[a+,a-],a+]" + detail::mode_tag({i, j, l}), column_block_norm(plus, cols) / (a * a * a), tolerance);

        Matrix minus = commutator(cij, ladder.lowering(l));
        if (i == l) minus -= s * ladder.lowering(j);
        if (i == j) minus -= s * ladder.lowering(l);
        report.add("[[a+,a-],a-]" + detail::mode_tag({i, j, l}), column_block_norm(minus, cols) / (a * a * a), tolerance);
      }
    }
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i; j < r; ++j) {
      report.add("[a+,a+]" + detail::mode_tag({i, j}),
                 column_block_norm(commutator(ladder.raising(i), ladder.raising(j)), cols) / (a * a), tolerance);
      report.add("[a-,a-]" + detail::mode_tag({i, j}),
                 column_block_norm(commutator(ladder.lowering(i), ladder.lowering(j)), cols) / (a * a), tolerance);
    }
  }
  return report;
}

/// Heisenberg condition [H, a_i^+-] = +-e_i a_i^+-, zero vacuum energy, and the
/// spectrum sum_i e_i n_i. Commutator residuals are relative to
/// max(1, ||H|| max_i ||a_i^+||); vacuum and spectrum residuals to max(1, ||H||).
inline ResidualReport verify_heisenberg(const LadderSet& ladder, double tolerance = 1e-12) {
  if (!ladder.hamiltonian() || !ladder.energies()) throw ParameterError("ladder set has no Hamiltonian");
  const Matrix& h = *ladder.hamiltonian();
  const auto& e = *ladder.energies();
  const auto& basis = ladder.basis();
  const Eigen::Index cols = basis.truncated() ? basis.dimension_up_to(basis.cutoff() - 1) : basis.dimension();
  const double hnorm = operator_norm(h);
  const double scale = std::max(1.0, hnorm * max_generator_norm(ladder));
  const double hscale = std::max(1.0, hnorm);
  ResidualReport report("heisenberg");

  for (int i = 0; i < ladder.r(); ++i) {
    const double ei = e[static_cast<std::size_t>(i)];
    const Matrix up = commutator(h, ladder.raising(i)) - ei * ladder.raising(i);
    const Matrix down = commutator(h, ladder.lowering(i)) + ei * ladder.lowering(i);
    report.add("[H,a+]-e a+" + detail::mode_tag({i}), column_block_norm(up, cols) / scale, tolerance);
    report.add("[H,a-]+e a-" + detail::mode_tag({i}), column_block_norm(down, cols) / scale, tolerance);
  }

  const double vacuum_energy = h.col(0).norm();
  report.add("H|0>", vacuum_energy / hscale, tolerance, vacuum_energy, 0.0);
  if (vacuum_energy > tolerance * hscale) report.note("nonzero vacuum energy: additive constant c is wrong");

  // Spectrum: H must be diagonal with entries sum_i e_i n_i.
  double spectral = 0.0;
  double offdiag = (h - Matrix(h.diagonal().asDiagonal())).norm();
  std::vector<double> expected;
  expected.reserve(static_cast<std::size_t>(basis.dimension()));
  for (Eigen::Index c = 0; c < basis.dimension(); ++c) {
    double energy = 0.0;
    for (int i = 0; i < ladder.r(); ++i) energy += e[static_cast<std::size_t>(i)] * basis.index(c)[i];
    expected.push_back(energy);
    spectral = std::max(spectral, std::abs(h(c, c) - energy));
  }
  report.add("H diagonal entries = sum e_i n_i", spectral / hscale, tolerance);
  report.add("H off-diagonal", offdiag / hscale, tolerance);

  Eigen::SelfAdjointEigenSolver<Matrix> eig(h, Eigen::EigenvaluesOnly);
  std::vector<double> got(eig.eigenvalues().data(), eig.eigenvalues().data() + eig.eigenvalues().size());
  std::sort(expected.begin(), expected.end());
  double eig_err = 0.0;
  for (std::size_t n = 0; n < got.size(); ++n) eig_err = std::max(eig_err, std::abs(got[n] - expected[n]));
  report.add("eigenvalues = {sum e_i n_i}", eig_err / hscale, tolerance);
  return report;
}

/// max |<m|b^+-|n> - <m|b^+-|n>_Bose| with b = a/sqrt(k), over all modes and all
/// matrix elements inside the shells total <= cutoff.
inline double bose_limit_deviation(const StatisticsParams& params, int cutoff) {
  if (cutoff < 0) throw ParameterError("cutoff must be non-negative");
  if (params.fermionic() && cutoff > params.pauli_bound())
    throw ParameterError("cutoff exceeds the fermionic Pauli bound k-1");
  const double sqrt_k = std::sqrt(static_cast<double>(params.k()));
  double worst = 0.0;
  for (const auto& n : graded_indices(params.r(), cutoff - 1)) {
    for (int i = 0; i < params.r(); ++i) {
      // <n+e_i| b^+ |n> equals <n| b^- |n+e_i>, so one sweep covers both.
      const MultiIndex up = n.shifted(i, +1);
      const double ours = std::sqrt(structure_function(params, up, i)) / sqrt_k;
      const double bose = std::sqrt(static_cast<double>(up[i]));
      worst = std::max(worst, std::abs(ours - bose));
    }
  }
  return worst;
}

}  // namespace arstat

#endif  // ARSTAT_ALGEBRA_HPP
