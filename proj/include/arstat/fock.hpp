#ifndef ARSTAT_FOCK_HPP
#define ARSTAT_FOCK_HPP

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arstat/combinatorics.hpp"
#include "arstat/linalg.hpp"
#include "arstat/params.hpp"

namespace arstat {

/// All multi-indices of length r with total <= max_total, graded by total and
/// ordered lexicographically descending within a shell: for r = 2 the order is
/// (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...
inline std::vector<MultiIndex> graded_indices(int r, int max_total) {
  if (r <= 0) throw ParameterError("r must be positive");
  std::vector<MultiIndex> out;
  std::vector<int> occ(static_cast<std::size_t>(r), 0);
  // Fill positions pos..r-1 with `remaining` quanta, largest first.
  auto fill = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == r - 1) {
      occ[static_cast<std::size_t>(pos)] = remaining;
      out.emplace_back(occ);
      return;
    }
    for (int n = remaining; n >= 0; --n) {
      occ[static_cast<std::size_t>(pos)] = n;
      self(self, pos + 1, remaining - n);
    }
  };
  for (int total = 0; total <= max_total; ++total) fill(fill, 0, total);
  return out;
}

/// Truncated (bosonic) or complete (fermionic) Fock basis in graded order.
class FockBasis {
 public:
  FockBasis(StatisticsParams params, int cutoff) : params_(params), cutoff_(cutoff) {
    indices_ = graded_indices(params_.r(), cutoff_);
    for (std::size_t p = 0; p < indices_.size(); ++p) lookup_.emplace(indices_[p], p);
  }

  const StatisticsParams& params() const { return params_; }
  int cutoff() const { return cutoff_; }
  Eigen::Index dimension() const { return static_cast<Eigen::Index>(indices_.size()); }
  const std::vector<MultiIndex>& indices() const { return indices_; }
  const MultiIndex& index(Eigen::Index pos) const { return indices_[static_cast<std::size_t>(pos)]; }

  std::optional<Eigen::Index> position(const MultiIndex& n) const {
    auto it = lookup_.find(n);
    if (it == lookup_.end()) return std::nullopt;
    return static_cast<Eigen::Index>(it->second);
  }

  /// Number of basis states with total occupation <= t (a leading block).
  Eigen::Index dimension_up_to(int t) const {
    if (t < 0) return 0;
    if (t >= cutoff_) return dimension();
    return static_cast<Eigen::Index>(arstat::binomial(t + params_.r(), params_.r()));
  }

  /// True when the space is cut off artificially (bosonic branch).
  bool truncated() const { return params_.bosonic(); }

 private:
  StatisticsParams params_;
  int cutoff_;
  std::vector<MultiIndex> indices_;
  std::map<MultiIndex, std::size_t> lookup_;
};

/// Builds the Fock basis. The fermionic space is finite, so `cutoff` is
/// ignored there and replaced by k-1 (generalized Pauli bound).
inline FockBasis enumerate_basis(const StatisticsParams& params, int cutoff) {
  if (params.fermionic()) {
    if (params.k() <= 1)
      throw ParameterError("fermionic representation with k <= 1 has no excited states (need k >= 2)");
    return FockBasis(params, params.pauli_bound());
  }
  if (cutoff < 0) throw ParameterError("cutoff must be non-negative");
  return FockBasis(params, cutoff);
}

/// F_i(n) = n_i (k0 + s |n|), the squared matrix element <n - e_i| a_i^- |n>.
inline double structure_function(const StatisticsParams& params, const MultiIndex& n, int i) {
  if (n.size() != params.r()) throw ParameterError("multi-index length differs from r");
  if (i < 0 || i >= params.r()) throw ParameterError("mode index out of range");
  const long value = static_cast<long>(n[i]) * (params.k0() + static_cast<long>(params.s()) * n.total());
  if (value < 0)
    throw DomainError("negative structure function: " + to_string(n) + " violates k0 + s n > 0");
  return static_cast<double>(value);
}

enum class LadderKind { lower, raise };

/// One ladder generator a_mode^- or a_mode^+.
struct LadderOp {
  LadderKind kind;
  int mode;
};

/// Action of a single generator on |n> in the untruncated space. Returns the
/// coefficient and target index, or nothing when the result vanishes.
inline std::optional<std::pair<double, MultiIndex>> ladder_action(const StatisticsParams& params, LadderOp op,
                                                                  const MultiIndex& n) {
  if (op.kind == LadderKind::lower) {
    if (n[op.mode] == 0) return std::nullopt;
    return std::make_pair(std::sqrt(structure_function(params, n, op.mode)), n.shifted(op.mode, -1));
  }
  MultiIndex up = n.shifted(op.mode, +1);
  if (params.fermionic() && up.total() > params.pauli_bound()) return std::nullopt;
  const double f = structure_function(params, up, op.mode);
  if (f == 0.0) return std::nullopt;
  return std::make_pair(std::sqrt(f), std::move(up));
}

/// Compression P W P of a product of generators (rightmost applied first).
/// Intermediate states may leave the basis, so products such as a^- a^+ are
/// exact on the top shell of a truncated space.
inline Matrix word_matrix(const FockBasis& basis, const std::vector<LadderOp>& word) {
  const Eigen::Index dim = basis.dimension();
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    MultiIndex state = basis.index(col);
    double coef = 1.0;
    bool alive = true;
    for (auto it = word.rbegin(); it != word.rend() && alive; ++it) {
      auto step = ladder_action(basis.params(), *it, state);
      if (!step) {
        alive = false;
        break;
      }
      coef *= step->first;
      state = std::move(step->second);
    }
    if (!alive) continue;
    if (auto row = basis.position(state)) m(*row, col) = coef;
  }
  return m;
}

/// Exact compression of [a_i^-, a_j^+].
inline Matrix exact_commutator_lr(const FockBasis& basis, int i, int j) {
  return word_matrix(basis, {{LadderKind::lower, i}, {LadderKind::raise, j}}) -
         word_matrix(basis, {{LadderKind::raise, j}, {LadderKind::lower, i}});
}

/// Choice of the additive constant in the single-mode Hamiltonians h_i.
enum class HamiltonianConstant {
  /// c = -s (k0 + s)/(r+1): the value for which the vacuum has zero energy.
  vacuum_zero,
  /// c = r s k0/(r+1), the printed value; leaves a vacuum energy s k0 + 1/(r+1) per unit e_i.
  as_printed,
};

inline double hamiltonian_constant(const StatisticsParams& p, HamiltonianConstant choice) {
  const double r = p.r();
  if (choice == HamiltonianConstant::as_printed) return r / (r + 1.0) * p.s() * p.k0();
  return -static_cast<double>(p.s()) * p.vacuum_commutator() / (r + 1.0);
}

/// Dense generator matrices on a basis.
class LadderSet {
 public:
  LadderSet(FockBasis basis, std::vector<Matrix> lowering, std::vector<Matrix> raising, std::vector<Matrix> number,
            std::optional<std::vector<double>> energies, std::optional<Matrix> hamiltonian)
      : basis_(std::move(basis)),
        lowering_(std::move(lowering)),
        raising_(std::move(raising)),
        number_(std::move(number)),
        energies_(std::move(energies)),
        hamiltonian_(std::move(hamiltonian)) {}

  const FockBasis& basis() const { return basis_; }
  const StatisticsParams& params() const { return basis_.params(); }
  int r() const { return basis_.params().r(); }
  Eigen::Index dimension() const { return basis_.dimension(); }

  const Matrix& lowering(int i) const { return lowering_.at(static_cast<std::size_t>(i)); }
  const Matrix& raising(int i) const { return raising_.at(static_cast<std::size_t>(i)); }
  const Matrix& number(int i) const { return number_.at(static_cast<std::size_t>(i)); }
  const std::optional<std::vector<double>>& energies() const { return energies_; }
  const std::optional<Matrix>& hamiltonian() const { return hamiltonian_; }

  /// [a_i^-, a_j^+] exact on every basis state, including the top shell.
  Matrix commutator_lr(int i, int j) const { return exact_commutator_lr(basis_, i, j); }

 private:
  FockBasis basis_;
  std::vector<Matrix> lowering_;
  std::vector<Matrix> raising_;
  std::vector<Matrix> number_;
  std::optional<std::vector<double>> energies_;
  std::optional<Matrix> hamiltonian_;
};

/// Hamiltonian sum_i e_i h_i with
/// h_i = s/(r+1) [ (r+1)[a_i^-, a_i^+] - sum_j [a_j^-, a_j^+] ] + c.
inline Matrix build_hamiltonian(const FockBasis& basis, const std::vector<double>& energies,
                                HamiltonianConstant constant = HamiltonianConstant::vacuum_zero) {
  const auto& p = basis.params();
  const int r = p.r();
  if (static_cast<int>(energies.size()) != r) throw ParameterError("energies must have length r");
  const Eigen::Index dim = basis.dimension();
  std::vector<Matrix> comm;
  comm.reserve(static_cast<std::size_t>(r));
  Matrix total = Matrix::Zero(dim, dim);
  for (int j = 0; j < r; ++j) {
    comm.push_back(exact_commutator_lr(basis, j, j));
    total += comm.back();
  }
  const double c = hamiltonian_constant(p, constant);
  const Matrix id = Matrix::Identity(dim, dim);
  Matrix h = Matrix::Zero(dim, dim);
  for (int i = 0; i < r; ++i) {
    const Matrix hi = (static_cast<double>(p.s()) / (r + 1.0)) * ((r + 1.0) * comm[static_cast<std::size_t>(i)] - total) + c * id;
    h += energies[static_cast<std::size_t>(i)] * hi;
  }
  return h;
}

inline LadderSet build_ladder_set(const FockBasis& basis, std::optional<std::vector<double>> energies = std::nullopt,
                                  HamiltonianConstant constant = HamiltonianConstant::vacuum_zero) {
  const int r = basis.params().r();
  const Eigen::Index dim = basis.dimension();
  std::vector<Matrix> lowering, raising, number;
  for (int i = 0; i < r; ++i) {
    Matrix lo = Matrix::Zero(dim, dim);
    Matrix num = Matrix::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
      const MultiIndex& n = basis.index(col);
      num(col, col) = n[i];
      if (auto step = ladder_action(basis.params(), {LadderKind::lower, i}, n)) {
        lo(*basis.position(step->second), col) = step->first;
      }
    }
    // Raising from the top shell leaves the truncated space and is dropped,
    // so the truncated a^+ is exactly the adjoint of the truncated a^-.
    raising.push_back(lo.adjoint());
    lowering.push_back(std::move(lo));
    number.push_back(std::move(num));
  }
  std::optional<Matrix> h;
  if (energies) h = build_hamiltonian(basis, *energies, constant);
  return LadderSet(basis, std::move(lowering), std::move(raising), std::move(number), std::move(energies), std::move(h));
}

}  // namespace arstat

#endif  // ARSTAT_FOCK_HPP
