#ifndef ARSTAT_BARGMANN_HPP
#define ARSTAT_BARGMANN_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arstat/combinatorics.hpp"
#include "arstat/fock.hpp"
#include "arstat/report.hpp"

namespace arstat {

/// The three analytic realizations of the Fock space.
enum class Realization {
  gk_omega,           ///< bosonic; a_i^+ acts as multiplication by omega_i
  kp_bosonic_z,       ///< bosonic; a_i^- acts as d/dz_i on the unit ball
  kp_fermionic_zeta,  ///< fermionic; a_i^- acts as d/dzeta_i on polynomials of degree <= k-1
};

inline std::string_view realization_name(Realization r) {
  switch (r) {
    case Realization::gk_omega: return "gk-omega";
    case Realization::kp_bosonic_z: return "kp-bosonic-z";
    case Realization::kp_fermionic_zeta: return "kp-fermionic-zeta";
  }
  return "?";
}

inline Realization realization_from_name(std::string_view name) {
  if (name == "gk-omega" || name == "gk") return Realization::gk_omega;
  if (name == "kp-bosonic-z" || name == "kp-bosonic") return Realization::kp_bosonic_z;
  if (name == "kp-fermionic-zeta" || name == "kp-fermionic") return Realization::kp_fermionic_zeta;
  throw ParameterError("unknown realization: " + std::string(name));
}

inline void require_compatible(Realization real, const StatisticsParams& params) {
  const bool want_fermionic = real == Realization::kp_fermionic_zeta;
  if (want_fermionic != params.fermionic())
    throw ParameterError(std::string(realization_name(real)) + " realization requires s = " +
                         (want_fermionic ? "-1" : "+1"));
}

/// C_{k;n}: the image of |n> is C_{k;n} times the monomial with exponents n.
///   GK:           sqrt((k-1)! / (n_1!...n_r! (k-1+n)!))
///   KP bosonic:   sqrt((k-1+n)! / (n_1!...n_r! (k-1)!))
///   KP fermionic: sqrt((k-1)! / (n_1!...n_r! (k-1-n)!))
/// All three equal 1 at n = 0.
inline double bargmann_coefficient(Realization real, const StatisticsParams& params, const MultiIndex& n) {
  require_compatible(real, params);
  if (n.size() != params.r()) throw ParameterError("multi-index length differs from r");
  const int k = params.k();
  const int total = n.total();
  std::vector<int> num, den(n.occupations());
  switch (real) {
    case Realization::gk_omega:
      num = {k - 1};
      den.push_back(k - 1 + total);
      break;
    case Realization::kp_bosonic_z:
      num = {k - 1 + total};
      den.push_back(k - 1);
      break;
    case Realization::kp_fermionic_zeta:
      if (total > params.pauli_bound())
        throw DomainError("fermionic index " + to_string(n) + " exceeds the Pauli bound k-1");
      num = {k - 1};
      den.push_back(k - 1 - total);
      break;
  }
  return std::sqrt(factorial_ratio(num, den));
}

/// Polynomial in r complex variables, stored sparsely by exponent.
class PolynomialVector {
 public:
  PolynomialVector(StatisticsParams params, Realization real, int degree_bound)
      : params_(params), real_(real), degree_bound_(degree_bound) {
    require_compatible(real, params);
    if (real == Realization::kp_fermionic_zeta) degree_bound_ = params.pauli_bound();
    if (degree_bound_ < 0) throw ParameterError("degree bound must be non-negative");
  }

  const StatisticsParams& params() const { return params_; }
  Realization realization() const { return real_; }
  int degree_bound() const { return degree_bound_; }
  const std::map<MultiIndex, Complex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Complex coefficient(const MultiIndex& n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? Complex{} : it->second;
  }

  /// Adds `value` to the coefficient of the monomial n; exact cancellations are removed.
  void add(const MultiIndex& n, Complex value) {
    if (n.size() != params_.r()) throw ParameterError("multi-index length differs from r");
    if (n.total() > degree_bound_) {
      if (value == Complex{}) return;
      throw DomainError("degree overflow: monomial " + to_string(n) + " exceeds degree bound " +
                        std::to_string(degree_bound_));
    }
    auto [it, inserted] = terms_.emplace(n, value);
    if (!inserted) it->second += value;
    if (it->second == Complex{}) terms_.erase(it);
  }

 private:
  StatisticsParams params_;
  Realization real_;
  int degree_bound_;
  std::map<MultiIndex, Complex> terms_;
};

/// Bargmann image of the Fock state with the given basis amplitudes.
inline PolynomialVector to_polynomial(Realization real, const FockBasis& basis, const Vector& amplitudes) {
  PolynomialVector p(basis.params(), real, basis.cutoff());
  for (Eigen::Index c = 0; c < basis.dimension(); ++c)
    if (amplitudes(c) != Complex{}) p.add(basis.index(c), amplitudes(c) * bargmann_coefficient(real, basis.params(), basis.index(c)));
  return p;
}

/// Inverse of to_polynomial on the basis span.
inline Vector from_polynomial(const PolynomialVector& p, const FockBasis& basis) {
  Vector v = Vector::Zero(basis.dimension());
  for (const auto& [n, c] : p.terms()) {
    auto pos = basis.position(n);
    if (!pos) throw DomainError("monomial " + to_string(n) + " lies outside the basis");
    v(*pos) = c / bargmann_coefficient(p.realization(), p.params(), n);
  }
  return v;
}

/// Multiplication by a variable or differentiation in it.
struct Factor {
  enum class Kind { multiply, differentiate };
  Kind kind;
  int var;
};

/// scale * f_1 f_2 ... f_m with the rightmost factor applied first.
struct OperatorWord {
  double scale;
  std::vector<Factor> factors;
};

/// Linear differential operator with polynomial coefficients, kept as a sum
/// of words so derivative combinatorics stay in integer arithmetic.
class DifferentialOperator {
 public:
  DifferentialOperator() = default;
  explicit DifferentialOperator(std::vector<OperatorWord> words) : words_(std::move(words)) {}

  const std::vector<OperatorWord>& words() const { return words_; }

  PolynomialVector apply(const PolynomialVector& p) const {
    PolynomialVector out(p.params(), p.realization(), p.degree_bound());
    // Collect exact integer multipliers per (word scale, monomial) before
    // converting, then accumulate.
    for (const auto& [n, c] : p.terms()) {
      std::map<MultiIndex, double> image;
      for (const auto& w : words_) {
        std::vector<int> exps = n.occupations();
        std::int64_t mult = 1;
        bool zero = false;
        for (auto f = w.factors.rbegin(); f != w.factors.rend(); ++f) {
          int& e = exps[static_cast<std::size_t>(f->var)];
          if (f->kind == Factor::Kind::multiply) {
            ++e;
          } else {
            if (e == 0) {
              zero = true;
              break;
            }
            mult *= e;
            --e;
          }
        }
        if (!zero) image[MultiIndex(std::move(exps))] += w.scale * static_cast<double>(mult);
      }
      for (const auto& [m, factor] : image)
        if (factor != 0.0) out.add(m, c * factor);
    }
    return out;
  }

 private:
  std::vector<OperatorWord> words_;
};

enum class GeneratorSymbol { lower, raise, number };

inline std::string_view symbol_name(GeneratorSymbol s) {
  switch (s) {
    case GeneratorSymbol::lower: return "lower";
    case GeneratorSymbol::raise: return "raise";
    case GeneratorSymbol::number: return "number";
  }
  return "?";
}

/// Differential form of a generator in a realization.
///   GK:           raise_i = w_i,  lower_i = k d_i + w_i d_i^2 + d_i sum_{j!=i} w_j d_j
///   KP bosonic:   lower_i = d_i,  raise_i = k z_i + z_i sum_j z_j d_j
///   KP fermionic: lower_i = d_i,  raise_i = (k-1) x_i - x_i sum_j x_j d_j
/// number_i = x_i d_i everywhere.
inline DifferentialOperator differential_form(Realization real, const StatisticsParams& params, GeneratorSymbol sym,
                                              int i) {
  require_compatible(real, params);
  if (i < 0 || i >= params.r()) throw ParameterError("mode index out of range");
  using K = Factor::Kind;
  const double k = params.k();
  const int r = params.r();
  std::vector<OperatorWord> words;
  if (sym == GeneratorSymbol::number) {
    words.push_back({1.0, {{K::multiply, i}, {K::differentiate, i}}});
    return DifferentialOperator(std::move(words));
  }
  switch (real) {
    case Realization::gk_omega:
      if (sym == GeneratorSymbol::raise) {
        words.push_back({1.0, {{K::multiply, i}}});
      } else {
        words.push_back({k, {{K::differentiate, i}}});
        words.push_back({1.0, {{K::multiply, i}, {K::differentiate, i}, {K::differentiate, i}}});
        for (int j = 0; j < r; ++j)
          if (j != i) words.push_back({1.0, {{K::differentiate, i}, {K::multiply, j}, {K::differentiate, j}}});
      }
      break;
    case Realization::kp_bosonic_z:
    case Realization::kp_fermionic_zeta: {
      if (sym == GeneratorSymbol::lower) {
        words.push_back({1.0, {{K::differentiate, i}}});
      } else {
        const bool fermi = real == Realization::kp_fermionic_zeta;
        words.push_back({fermi ? k - 1.0 : k, {{K::multiply, i}}});
        for (int j = 0; j < r; ++j)
          words.push_back({fermi ? -1.0 : 1.0, {{K::multiply, i}, {K::multiply, j}, {K::differentiate, j}}});
      }
      break;
    }
  }
  return DifferentialOperator(std::move(words));
}

inline PolynomialVector apply_operator(Realization real, GeneratorSymbol sym, int i, const PolynomialVector& p) {
  if (p.realization() != real) throw ParameterError("polynomial belongs to a different realization");
  return differential_form(real, p.params(), sym, i).apply(p);
}

namespace detail {

inline const Matrix& generator_matrix(const LadderSet& ladder, GeneratorSymbol sym, int i) {
  switch (sym) {
    case GeneratorSymbol::lower: return ladder.lowering(i);
    case GeneratorSymbol::raise: return ladder.raising(i);
    case GeneratorSymbol::number: return ladder.number(i);
  }
  return ladder.number(i);
}

/// max_m |got_m - want_m| / max(1, |want_m|) over the union of supports.
inline double polynomial_distance(const PolynomialVector& got, const PolynomialVector& want) {
  double worst = 0.0;
  for (const auto& [m, c] : want.terms())
    worst = std::max(worst, std::abs(got.coefficient(m) - c) / std::max(1.0, std::abs(c)));
  for (const auto& [m, c] : got.terms())
    if (want.terms().find(m) == want.terms().end()) worst = std::max(worst, std::abs(c));
  return worst;
}

}  // namespace detail

/// Compares the differential action on every monomial C_{k;n} x^n (total <=
/// degree, or the whole fermionic space) with the Fock matrices carried through
/// the same map. Agreement means D = L M L^{-1} with L = diag(C_{k;n}).
inline ResidualReport verify_realization_equivalence(Realization real, const StatisticsParams& params, int degree,
                                                     double tolerance = 1e-12) {
  require_compatible(real, params);
  if (degree < 0) throw ParameterError("degree bound must be non-negative");
  const bool fermi = real == Realization::kp_fermionic_zeta;
  // One extra shell holds the images of raising from the top tested degree.
  const FockBasis basis = enumerate_basis(params, degree + 1);
  const LadderSet ladder = build_ladder_set(basis);
  const int tested = fermi ? params.pauli_bound() : degree;
  const Eigen::Index cols = basis.dimension_up_to(tested);

  ResidualReport report(std::string("bargmann equivalence ") + std::string(realization_name(real)));
  for (GeneratorSymbol sym : {GeneratorSymbol::lower, GeneratorSymbol::raise, GeneratorSymbol::number}) {
    for (int i = 0; i < params.r(); ++i) {
      const DifferentialOperator op = differential_form(real, params, sym, i);
      const Matrix& m = detail::generator_matrix(ladder, sym, i);
      double worst = 0.0;
      MultiIndex worst_at = basis.index(0);
      for (Eigen::Index col = 0; col < cols; ++col) {
        const MultiIndex& n = basis.index(col);
        PolynomialVector mono(params, real, basis.cutoff());
        mono.add(n, bargmann_coefficient(real, params, n));
        const PolynomialVector got = op.apply(mono);
        const PolynomialVector want = to_polynomial(real, basis, m.col(col));
        const double d = detail::polynomial_distance(got, want);
        if (d > worst) {
          worst = d;
          worst_at = n;
        }
      }
      const auto& e = report.add(std::string(symbol_name(sym)) + "_" + std::to_string(i + 1), worst, tolerance);
      if (!e.pass) report.note("mismatch for " + e.name + " at monomial " + to_string(worst_at));
    }
  }
  return report;
}

/// Generalized Pauli bound: raise_i annihilates every monomial of total k-1.
inline ResidualReport verify_fermionic_pauli_bound(const StatisticsParams& params, double tolerance = 1e-12) {
  const Realization real = Realization::kp_fermionic_zeta;
  require_compatible(real, params);
  ResidualReport report("fermionic pauli bound");
  const int top = params.pauli_bound();
  for (int i = 0; i < params.r(); ++i) {
    double worst = 0.0;
    for (const auto& n : graded_indices(params.r(), top)) {
      if (n.total() != top) continue;
      PolynomialVector mono(params, real, top);
      mono.add(n, bargmann_coefficient(real, params, n));
      const PolynomialVector image = apply_operator(real, GeneratorSymbol::raise, i, mono);
      for (const auto& [m, c] : image.terms()) worst = std::max(worst, std::abs(c));
    }
    report.add("raise_" + std::to_string(i + 1) + " on top shell", worst, tolerance);
  }
  return report;
}

/// [lower_i, raise_j] as polynomial operators against the exact Fock commutator,
/// on monomials of total <= degree - 2.
inline ResidualReport verify_gk_commutators(const StatisticsParams& params, int degree, double tolerance = 1e-12) {
  const Realization real = Realization::gk_omega;
  require_compatible(real, params);
  const FockBasis basis = enumerate_basis(params, degree);
  const Eigen::Index cols = basis.dimension_up_to(degree - 2);
  ResidualReport report("gk commutators");
  for (int i = 0; i < params.r(); ++i) {
    for (int j = 0; j < params.r(); ++j) {
      const Matrix fock = exact_commutator_lr(basis, i, j);
      const auto lower = differential_form(real, params, GeneratorSymbol::lower, i);
      const auto raise = differential_form(real, params, GeneratorSymbol::raise, j);
      double worst = 0.0;
      for (Eigen::Index col = 0; col < cols; ++col) {
        const MultiIndex& n = basis.index(col);
        PolynomialVector mono(params, real, degree);
        mono.add(n, bargmann_coefficient(real, params, n));
        PolynomialVector got = lower.apply(raise.apply(mono));
        const PolynomialVector reversed = raise.apply(lower.apply(mono));
        for (const auto& [m, c] : reversed.terms()) got.add(m, -c);
        worst = std::max(worst, detail::polynomial_distance(got, to_polynomial(real, basis, fock.col(col))));
      }
      report.add("[lower_" + std::to_string(i + 1) + ",raise_" + std::to_string(j + 1) + "]", worst, tolerance);
    }
  }
  return report;
}

}  // namespace arstat

#endif  // ARSTAT_BARGMANN_HPP
