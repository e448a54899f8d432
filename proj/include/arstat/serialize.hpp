#ifndef ARSTAT_SERIALIZE_HPP
#define ARSTAT_SERIALIZE_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arstat/bargmann.hpp"
#include "arstat/coherent.hpp"
#include "arstat/fock.hpp"
#include "arstat/measures.hpp"
#include "arstat/params.hpp"
#include "arstat/report.hpp"
#include "arstat/uncertainty.hpp"

namespace arstat {

using json = nlohmann::json;

inline json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

inline Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParameterError("complex number must be [re, im]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

inline json params_to_json(const StatisticsParams& p) { return {{"r", p.r()}, {"k", p.k()}, {"s", p.s()}}; }

inline StatisticsParams params_from_json(const json& j) {
  return StatisticsParams(j.at("r").get<int>(), j.at("k").get<int>(), sign_from_int(j.at("s").get<int>()));
}

inline json index_to_json(const MultiIndex& n) { return n.occupations(); }
inline MultiIndex index_from_json(const json& j) { return MultiIndex(j.get<std::vector<int>>()); }

/// Row-major list of [re, im] pairs.
inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows ? static_cast<Eigen::Index>(j.at(0).size()) : 0;
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j.at(i).size()) != cols) throw ParameterError("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = complex_from_json(j.at(i).at(c));
  }
  return m;
}

inline json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

inline Vector vector_from_json(const json& j) {
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = complex_from_json(j.at(i));
  return v;
}

inline json labels_to_json(const std::vector<Complex>& l) {
  json out = json::array();
  for (const auto& c : l) out.push_back(complex_to_json(c));
  return out;
}

inline std::vector<Complex> labels_from_json(const json& j) {
  std::vector<Complex> out;
  for (const auto& c : j) out.push_back(complex_from_json(c));
  return out;
}

/// {params, cutoff, index_list, matrices: {lowering, raising, number, hamiltonian?}}.
inline json ladder_to_json(const LadderSet& ladder) {
  json idx = json::array();
  for (const auto& n : ladder.basis().indices()) idx.push_back(index_to_json(n));
  json lowering = json::array(), raising = json::array(), number = json::array();
  for (int i = 0; i < ladder.r(); ++i) {
    lowering.push_back(matrix_to_json(ladder.lowering(i)));
    raising.push_back(matrix_to_json(ladder.raising(i)));
    number.push_back(matrix_to_json(ladder.number(i)));
  }
  json j = {{"params", params_to_json(ladder.params())},
            {"cutoff", ladder.basis().cutoff()},
            {"index_list", idx},
            {"matrices", {{"lowering", lowering}, {"raising", raising}, {"number", number}}}};
  if (ladder.energies()) j["energies"] = *ladder.energies();
  if (ladder.hamiltonian()) j["matrices"]["hamiltonian"] = matrix_to_json(*ladder.hamiltonian());
  return j;
}

/// Rebuilds the ladder set from its parameters and cutoff, then checks that
/// the stored matrices agree with the rebuilt ones.
inline LadderSet ladder_from_json(const json& j, double tol = 1e-12) {
  const StatisticsParams p = params_from_json(j.at("params"));
  const FockBasis basis = enumerate_basis(p, j.at("cutoff").get<int>());
  std::optional<std::vector<double>> energies;
  if (j.contains("energies")) energies = j.at("energies").get<std::vector<double>>();
  LadderSet ladder = build_ladder_set(basis, energies);
  const auto& idx = j.at("index_list");
  if (static_cast<Eigen::Index>(idx.size()) != basis.dimension()) throw ParameterError("index list length mismatch");
  for (Eigen::Index pos = 0; pos < basis.dimension(); ++pos)
    if (index_from_json(idx.at(pos)) != basis.index(pos)) throw ParameterError("index list order mismatch");
  for (int i = 0; i < p.r(); ++i) {
    if ((matrix_from_json(j.at("matrices").at("lowering").at(i)) - ladder.lowering(i)).norm() > tol)
      throw ParameterError("stored lowering matrix differs from the representation");
  }
  return ladder;
}

/// {realization, params, terms: [{index, re, im}]}.
inline json polynomial_to_json(const PolynomialVector& poly) {
  json terms = json::array();
  for (const auto& [n, c] : poly.terms()) terms.push_back({{"index", index_to_json(n)}, {"re", c.real()}, {"im", c.imag()}});
  return {{"realization", std::string(realization_name(poly.realization()))},
          {"params", params_to_json(poly.params())},
          {"degree_bound", poly.degree_bound()},
          {"terms", terms}};
}

inline PolynomialVector polynomial_from_json(const json& j) {
  const StatisticsParams p = params_from_json(j.at("params"));
  const Realization real = realization_from_name(j.at("realization").get<std::string>());
  PolynomialVector poly(p, real, j.at("degree_bound").get<int>());
  for (const auto& t : j.at("terms"))
    poly.add(index_from_json(t.at("index")), Complex(t.at("re").get<double>(), t.at("im").get<double>()));
  return poly;
}

/// {family, params, label, cutoff, amplitudes}.
inline json state_to_json(const CoherentState& st) {
  return {{"family", std::string(family_name(st.spec.family))},
          {"params", params_to_json(st.spec.params)},
          {"label", labels_to_json(st.spec.label)},
          {"cutoff", st.cutoff},
          {"amplitudes", vector_to_json(st.amplitudes)}};
}

inline CoherentState state_from_json(const json& j) {
  CoherentStateSpec spec(family_from_name(j.at("family").get<std::string>()), labels_from_json(j.at("label")),
                         params_from_json(j.at("params")), j.at("cutoff").get<int>());
  CoherentState st = build_state(spec, enumerate_basis(spec.params, j.at("cutoff").get<int>()));
  const Vector stored = vector_from_json(j.at("amplitudes"));
  if (stored.size() != st.amplitudes.size()) throw ParameterError("amplitude count differs from the basis dimension");
  st.amplitudes = stored;
  return st;
}

/// {kind, params, n, lhs, rhs, rel_error, nodes_used}.
inline json moment_to_json(const MomentReport& m) {
  return {{"kind", std::string(measure_name(m.kind))},
          {"params", params_to_json(m.params)},
          {"n", index_to_json(m.n)},
          {"lhs", m.lhs},
          {"rhs", m.rhs},
          {"rel_error", m.rel_error},
          {"nodes_used", m.nodes_used},
          {"converged", m.converged},
          {"lhs_radial", m.lhs_radial},
          {"rhs_printed", m.rhs_printed}};
}

/// {state_spec, quadrature_provenance, det_sigma, det_C, gap, pass}.
inline json uncertainty_to_json(const IntelligentReport& rep) {
  return {{"state_spec", rep.state_spec},
          {"quadrature_provenance", std::string(provenance_name(rep.provenance))},
          {"det_sigma", rep.rs.det_sigma},
          {"det_C", rep.rs.det_c},
          {"gap", rep.rs.gap},
          {"pass", rep.rs.pass}};
}

inline json entry_to_json(const CheckEntry& e) {
  return {{"name", e.name}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"residual", e.residual},
          {"tolerance", e.tolerance}, {"pass", e.pass}};
}

inline json report_to_json(const ResidualReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries()) entries.push_back(entry_to_json(e));
  return {{"subject", rep.subject()}, {"entries", entries}, {"notes", rep.notes()}, {"pass", rep.pass()}};
}

}  // namespace arstat

#endif  // ARSTAT_SERIALIZE_HPP
