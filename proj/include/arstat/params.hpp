#ifndef ARSTAT_PARAMS_HPP
#define ARSTAT_PARAMS_HPP

#include <compare>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arstat {

/// Invalid representation parameters or malformed inputs.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A label or point outside the domain on which an object is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Sign of the deformation parameter: +1 bosonic branch, -1 fermionic branch.
enum class Sign : int { fermionic = -1, bosonic = +1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

inline Sign sign_from_int(int s) {
  if (s == 1) return Sign::bosonic;
  if (s == -1) return Sign::fermionic;
  throw ParameterError("s must be +1 or -1");
}

/// Representation data (r modes, label k, sign s).
///
/// k0 = k - (1+s)/2 is the affine offset of the structure functions, so
/// k0 = k-1 on the bosonic branch and k0 = k on the fermionic branch.
class StatisticsParams {
 public:
  StatisticsParams(int r, int k, Sign s) : r_(r), k_(k), s_(s) {
    if (r_ <= 0) throw ParameterError("r must be positive");
    if (k_ <= 0) throw ParameterError("k must be positive");
  }

  int r() const { return r_; }
  int k() const { return k_; }
  Sign sign() const { return s_; }
  int s() const { return to_int(s_); }
  int k0() const { return k_ - (1 + s()) / 2; }
  bool bosonic() const { return s_ == Sign::bosonic; }
  bool fermionic() const { return s_ == Sign::fermionic; }

  /// k0 + s, the vacuum expectation of every diagonal commutator [a_i^-, a_i^+].
  int vacuum_commutator() const { return k0() + s(); }

  /// Largest admissible total occupation on the fermionic branch.
  int pauli_bound() const { return k_ - 1; }

  /// Flags for representations that are legal but trivial or unusual.
  bool degenerate() const { return (fermionic() && k_ <= 1) || (bosonic() && k0() == 0); }

  friend bool operator==(const StatisticsParams&, const StatisticsParams&) = default;

 private:
  int r_;
  int k_;
  Sign s_;
};

inline std::ostream& operator<<(std::ostream& os, const StatisticsParams& p) {
  return os << "(r=" << p.r() << ", k=" << p.k() << ", s=" << (p.s() > 0 ? "+1" : "-1") << ")";
}

/// Occupation numbers (n_1, ..., n_r) of a Fock basis state.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> occupations) : occ_(std::move(occupations)) {
    for (int n : occ_)
      if (n < 0) throw ParameterError("occupation numbers must be non-negative");
  }
  MultiIndex(std::initializer_list<int> occupations) : MultiIndex(std::vector<int>(occupations)) {}

  static MultiIndex zero(int r) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(r), 0)); }

  int size() const { return static_cast<int>(occ_.size()); }
  int operator[](int i) const { return occ_[static_cast<std::size_t>(i)]; }
  int total() const { return std::accumulate(occ_.begin(), occ_.end(), 0); }
  const std::vector<int>& occupations() const { return occ_; }

  /// Copy with n_i shifted by delta; the caller guarantees non-negativity.
  MultiIndex shifted(int i, int delta) const {
    MultiIndex out = *this;
    out.occ_[static_cast<std::size_t>(i)] += delta;
    return out;
  }

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> occ_;
};

inline std::ostream& operator<<(std::ostream& os, const MultiIndex& n) {
  os << '(';
  for (int i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
  return os << ')';
}

inline std::string to_string(const MultiIndex& n) {
  std::string out = "(";
  for (int i = 0; i < n.size(); ++i) out += (i ? "," : "") + std::to_string(n[i]);
  return out + ")";
}

}  // namespace arstat

#endif  // ARSTAT_PARAMS_HPP
