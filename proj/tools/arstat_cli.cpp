// Command-line front end: representations, verification suites, coherent states.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arstat/arstat.hpp"
#include "arstat/serialize.hpp"
#include "cli_support.hpp"

namespace {

using namespace arstat;
using namespace arstat::cli;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string tag(const StatisticsParams& p) {
  std::ostringstream os;
  os << p << ' ';
  return os.str();
}

// ---------------------------------------------------------------- grid

struct Grid {
  std::vector<StatisticsParams> points;
};

Grid make_grid(const RunConfig& c) {
  std::vector<int> rs = c.r ? std::vector<int>{*c.r} : std::vector<int>{1, 2};
  std::vector<int> ks = c.k ? std::vector<int>{*c.k} : (c.quick ? std::vector<int>{2, 3} : std::vector<int>{2, 3, 4});
  std::vector<int> ss = c.s ? std::vector<int>{*c.s} : std::vector<int>{1, -1};
  Grid g;
  for (int r : rs)
    for (int k : ks)
      for (int s : ss) g.points.emplace_back(r, k, sign_from_int(s));
  return g;
}

std::vector<double> energies_for(const RunConfig& c, int r) {
  if (!c.energies.empty()) {
    if (static_cast<int>(c.energies.size()) != r) throw ParameterError("--energies must list r values");
    return c.energies;
  }
  std::vector<double> e;
  for (int i = 0; i < r; ++i) e.push_back(1.0 + 0.5 * i);
  return e;
}

// ---------------------------------------------------------------- suites

ResidualReport algebra_point(const RunConfig& c, const Tolerances& tol, const StatisticsParams& p) {
  const double t = tol.get("algebra");
  const int cutoff = c.cutoff.value_or(c.quick ? 6 : 8);
  const FockBasis basis = enumerate_basis(p, cutoff);
  const LadderSet ladder = build_ladder_set(basis, energies_for(c, p.r()));
  ResidualReport rep;
  rep.merge(verify_triple_relations(ladder, t));
  rep.merge(verify_heisenberg(ladder, t));
  if (p.fermionic()) {
    const double formula = static_cast<double>(fermionic_dimension(p.r(), p.k()));
    rep.add("dimension = (k-1+r)!/((k-1)! r!)", std::abs(static_cast<double>(basis.dimension()) - formula), 0.0,
            static_cast<double>(basis.dimension()), formula);
  }
  return rep;
}

ResidualReport bargmann_point(const RunConfig& c, const Tolerances& tol, const StatisticsParams& p) {
  const double t = tol.get("bargmann");
  const int degree = c.cutoff.value_or(c.quick ? 4 : 6);
  ResidualReport rep;
  if (p.bosonic()) {
    rep.merge(verify_realization_equivalence(Realization::gk_omega, p, degree, t), "gk ");
    rep.merge(verify_realization_equivalence(Realization::kp_bosonic_z, p, degree, t), "kp-bosonic ");
    rep.merge(verify_gk_commutators(p, degree, t), "gk ");
  } else {
    rep.merge(verify_realization_equivalence(Realization::kp_fermionic_zeta, p, p.pauli_bound(), t), "kp-fermionic ");
    rep.merge(verify_fermionic_pauli_bound(p, t));
  }
  return rep;
}

std::vector<MeasureKind> kinds_for(const RunConfig& c, const StatisticsParams& p) {
  std::vector<MeasureKind> all = p.bosonic() ? std::vector<MeasureKind>{MeasureKind::gk_bessel, MeasureKind::kp_simplex}
                                             : std::vector<MeasureKind>{MeasureKind::kp_fermionic_mellin};
  if (c.kind.empty()) return all;
  const MeasureKind want = measure_from_name(c.kind);
  std::vector<MeasureKind> out;
  for (auto k : all)
    if (k == want) out.push_back(k);
  return out;
}

ResidualReport measures_point(const RunConfig& c, const Tolerances& tol, const StatisticsParams& p) {
  const int nmax = c.nmax.value_or(c.quick ? 2 : 4);
  if (nmax < 0) throw ParameterError("--nmax must be non-negative");
  ResidualReport rep;
  for (MeasureKind kind : kinds_for(c, p)) {
    std::optional<MeasureSpec> spec;
    try {
      spec.emplace(kind, p);
    } catch (const ParameterError& e) {
      rep.note(std::string(measure_name(kind)) + " skipped: " + e.what());
      continue;
    }
    const int top = p.fermionic() ? std::min(nmax, p.pauli_bound()) : nmax;
    for (const auto& n : graded_indices(p.r(), top)) {
      const MomentReport m = verify_moment(*spec, n);
      rep.add(std::string(measure_name(kind)) + " moment n=" + to_string(n), m.rel_error, tol.get("measures"), m.lhs,
              m.rhs);
      if (!m.converged) rep.note(std::string(measure_name(kind)) + " n=" + to_string(n) + " did not converge");
      if (kind == MeasureKind::kp_simplex) {
        const DirichletReport d = verify_dirichlet_identity(p.r(), p.k(), n);
        rep.add("dirichlet n=" + to_string(n), d.rel_error, tol.get("dirichlet"), d.lhs, d.rhs);
      }
    }
  }
  return rep;
}

std::vector<Complex> sample_label(CoherentFamily f, int r) {
  std::vector<Complex> l;
  const double scale = 1.0 / std::sqrt(static_cast<double>(r));
  for (int i = 0; i < r; ++i) {
    switch (f) {
      case CoherentFamily::gk: l.push_back(std::polar(0.5 * scale * (1.0 - 0.1 * i), 0.6 * i)); break;
      case CoherentFamily::kp_bosonic: l.push_back(std::polar(0.5 * scale * (1.0 - 0.1 * i), 0.4 + 0.5 * i)); break;
      case CoherentFamily::kp_fermionic: l.push_back(std::polar(0.9 - 0.1 * i, 0.3 - 0.8 * i)); break;
    }
  }
  return l;
}

ResidualReport coherent_checks(const CoherentStateSpec& spec, const Tolerances& tol) {
  ResidualReport rep;
  const FockBasis basis = coherent_basis(spec);
  const CoherentState st = build_state(spec, basis);
  const std::string f = std::string(family_name(spec.family)) + " ";
  rep.add(f + "unit norm", std::abs(st.amplitudes.norm() - 1.0), tol.get("coherent_norm"), st.amplitudes.norm(), 1.0);
  if (spec.family == CoherentFamily::gk) {
    const LadderSet ladder = build_ladder_set(basis);
    rep.add(f + "eigenrelation a_i^-|w> = w_i|w>", gk_eigen_residual(st.amplitudes, ladder, spec.label),
            tol.get("coherent_eigen"));
    return rep;
  }
  rep.add(f + "closed-form N^2 vs direct sum", std::abs(st.norm_sq_sum - *st.norm_sq_closed) / *st.norm_sq_closed,
          tol.get("coherent_norm"), st.norm_sq_sum, *st.norm_sq_closed);
  const LadderSet ladder = build_ladder_set(basis);
  const double dtol = spec.params.fermionic() ? tol.get("displacement_fermionic") : tol.get("displacement_bosonic");
  const DisplacementCheck dc = verify_displacement(spec, ladder, dtol);
  rep.merge(dc.report, f);
  bool nonzero = true;
  for (const auto& z : spec.label) nonzero = nonzero && z != Complex(0.0);
  if (nonzero) {
    const auto back = label_from_displacement(dc.params);
    double err = 0.0;
    for (std::size_t i = 0; i < back.size(); ++i) err = std::max(err, std::abs(back[i] - spec.label[i]));
    rep.add(f + "label round trip", err, 1e-10);
  }
  return rep;
}

ResidualReport coherent_point(const RunConfig& c, const Tolerances& tol, const StatisticsParams& p) {
  ResidualReport rep;
  if (p.bosonic()) {
    rep.merge(coherent_checks(CoherentStateSpec(CoherentFamily::gk, sample_label(CoherentFamily::gk, p.r()), p, c.cutoff), tol));
    rep.merge(coherent_checks(
        CoherentStateSpec(CoherentFamily::kp_bosonic, sample_label(CoherentFamily::kp_bosonic, p.r()), p, c.cutoff), tol));
  } else {
    rep.merge(coherent_checks(
        CoherentStateSpec(CoherentFamily::kp_fermionic, sample_label(CoherentFamily::kp_fermionic, p.r()), p), tol));
  }
  return rep;
}

/// Fock state |1, 0, ..., 0> must not saturate the inequality but must satisfy it.
ResidualReport fock_negative_control(const StatisticsParams& p, double tolerance) {
  const FockBasis basis = enumerate_basis(p, 2);
  const LadderSet wide = build_ladder_set(moment_basis(basis));
  Vector psi = Vector::Zero(wide.dimension());
  psi(*wide.basis().position(MultiIndex::zero(p.r()).shifted(0, 1))) = 1.0;
  const RSReport rs = check_rs_minimization(psi, canonical_quadratures(wide), tolerance);
  ResidualReport rep;
  if (p.fermionic() && p.pauli_bound() == 1) {
    // |e_1> is then the top shell, a limit of KP coherent states, and saturates the bound.
    rep.note("fock |e_1> lies on the top shell (k = 2); negative control skipped");
  } else {
    rep.add("fock |e_1> breaks equality (negative control)", rs.pass ? 1.0 : 0.0, 0.0, rs.det_sigma, rs.det_c);
  }
  rep.add("fock |e_1> det sigma >= det C", rs.robertson_holds ? 0.0 : 1.0, 0.0, rs.det_sigma, rs.det_c);
  return rep;
}

ResidualReport uncertainty_point(const RunConfig& c, const Tolerances& tol, const StatisticsParams& p) {
  ResidualReport rep;
  auto absorb = [&](const IntelligentReport& ir, const std::string& prefix) {
    rep.merge(ir.checks, prefix);
    rep.add(prefix + "sigma positive semidefinite", std::max(0.0, -ir.rs.min_sigma_eigenvalue), 1e-10);
    rep.add(prefix + "det sigma >= det C", ir.rs.robertson_holds ? 0.0 : 1.0, 0.0, ir.rs.det_sigma, ir.rs.det_c);
  };
  if (p.bosonic()) {
    absorb(gk_uncertainty(CoherentStateSpec(CoherentFamily::gk, sample_label(CoherentFamily::gk, p.r()), p, c.cutoff),
                          tol.get("uncertainty_gk")),
           "gk ");
    absorb(kp_uncertainty(CoherentStateSpec(CoherentFamily::kp_bosonic, sample_label(CoherentFamily::kp_bosonic, p.r()), p,
                                            c.cutoff.value_or(p.r() == 1 ? 40 : 24)),
                          tol.get("uncertainty_kp")),
           "kp-bosonic ");
  } else {
    absorb(kp_uncertainty(CoherentStateSpec(CoherentFamily::kp_fermionic, sample_label(CoherentFamily::kp_fermionic, p.r()), p),
                          tol.get("uncertainty_kp")),
           "kp-fermionic ");
  }
  rep.merge(fock_negative_control(p, tol.get("uncertainty_kp")));
  return rep;
}

using PointFn = ResidualReport (*)(const RunConfig&, const Tolerances&, const StatisticsParams&);

const std::map<std::string, PointFn>& suite_table() {
  static const std::map<std::string, PointFn> table = {{"algebra", algebra_point},
                                                       {"bargmann", bargmann_point},
                                                       {"measures", measures_point},
                                                       {"coherent", coherent_point},
                                                       {"uncertainty", uncertainty_point}};
  return table;
}

SuiteReport run_suite(const std::string& name, const RunConfig& c, const Tolerances& tol) {
  const auto it = suite_table().find(name);
  if (it == suite_table().end()) throw ParameterError("unknown suite: " + name);
  const auto start = std::chrono::steady_clock::now();
  const Grid grid = make_grid(c);
  std::vector<std::function<ResidualReport()>> tasks;
  for (const auto& p : grid.points) tasks.push_back([fn = it->second, &c, &tol, p] { return fn(c, tol, p); });
  const auto results = run_ordered(tasks);
  SuiteReport out{name};
  for (std::size_t i = 0; i < results.size(); ++i) out.absorb(results[i], tag(grid.points[i]));
  out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// ---------------------------------------------------------------- output

json suite_json(const SuiteReport& s, bool timing) {
  json entries = json::array();
  for (const auto& e : s.entries) entries.push_back(entry_to_json(e));
  json j = {{"suite", s.suite},
            {"entries", entries},
            {"notes", s.notes},
            {"summary", {{"total", s.entries.size()}, {"passed", s.passed()}, {"failed", s.failed()}}}};
  if (timing) j["wall_time_s"] = s.wall_time;
  return j;
}

std::string render_suites(const std::vector<SuiteReport>& suites, const RunConfig& c) {
  std::ostringstream os;
  if (c.format == "json") {
    if (suites.size() == 1) {
      os << suite_json(suites.front(), c.timing).dump(2) << '\n';
    } else {
      json all = json::array();
      std::size_t passed = 0, failed = 0;
      for (const auto& s : suites) {
        all.push_back(suite_json(s, c.timing));
        passed += s.passed();
        failed += s.failed();
      }
      os << json{{"suites", all}, {"summary", {{"passed", passed}, {"failed", failed}}}}.dump(2) << '\n';
    }
  } else if (c.format == "csv") {
    os << "suite,name,lhs,rhs,residual,tolerance,pass\n";
    for (const auto& s : suites)
      for (const auto& e : s.entries)
        os << s.suite << ",\"" << e.name << "\"," << fmt(e.lhs) << ',' << fmt(e.rhs) << ',' << fmt(e.residual) << ','
           << fmt(e.tolerance) << ',' << (e.pass ? "PASS" : "FAIL") << '\n';
  } else {
    for (const auto& s : suites) {
      std::size_t width = 4;
      for (const auto& e : s.entries) width = std::max(width, e.name.size());
      // Moment residuals are relative errors.
      const char* label = s.suite == "measures" ? "rel_error " : "residual ";
      os << "== " << s.suite << " ==\n";
      for (const auto& e : s.entries) {
        os << (e.pass ? "PASS  " : "FAIL  ") << e.name << std::string(width - e.name.size() + 2, ' ')
           << label << fmt(e.residual) << "  tol " << fmt(e.tolerance);
        if (e.lhs != 0.0 || e.rhs != 0.0) os << "  lhs " << fmt(e.lhs) << "  rhs " << fmt(e.rhs);
        os << '\n';
      }
      for (const auto& n : s.notes) os << "note  " << n << '\n';
    }
    for (const auto& s : suites) {
      os << s.suite << ": " << s.passed() << " passed, " << s.failed() << " failed";
      if (c.timing) os << " (" << fmt(s.wall_time) << " s)";
      os << '\n';
    }
  }
  return os.str();
}

void emit(const std::string& text, const RunConfig& c) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ParameterError("cannot open output file: " + c.out);
  f << text;
}

// ---------------------------------------------------------------- commands

int cmd_verify(const RunConfig& c) {
  const Tolerances tol = resolve_tolerances(c);
  const std::string suite = c.target.empty() ? "all" : c.target;
  std::vector<SuiteReport> reports;
  if (suite == "all") {
    for (const auto& [name, fn] : suite_table()) reports.push_back(run_suite(name, c, tol));
  } else {
    reports.push_back(run_suite(suite, c, tol));
  }
  emit(render_suites(reports, c), c);
  if (!c.out.empty())
    for (const auto& s : reports) std::cout << s.suite << ": " << s.passed() << " passed, " << s.failed() << " failed\n";
  for (const auto& s : reports)
    if (!s.pass()) return 1;
  return 0;
}

int cmd_rep(const RunConfig& c) {
  const StatisticsParams p(c.r.value_or(1), c.k.value_or(2), sign_from_int(c.s.value_or(1)));
  const FockBasis basis = enumerate_basis(p, c.cutoff.value_or(4));
  const LadderSet ladder = build_ladder_set(basis, energies_for(c, p.r()));
  std::map<double, int> spectrum;
  for (Eigen::Index i = 0; i < basis.dimension(); ++i) {
    double e = 0.0;
    for (int m = 0; m < p.r(); ++m) e += (*ladder.energies())[static_cast<std::size_t>(m)] * basis.index(i)[m];
    ++spectrum[e];
  }
  std::ostringstream os;
  if (c.format == "json") {
    json j = ladder_to_json(ladder);
    j["dimension"] = basis.dimension();
    json spec = json::array();
    for (const auto& [e, mult] : spectrum) spec.push_back({{"energy", e}, {"multiplicity", mult}});
    j["spectrum"] = spec;
    os << j.dump(2) << '\n';
  } else if (c.format == "csv") {
    os << "position,index,energy\n";
    for (Eigen::Index i = 0; i < basis.dimension(); ++i)
      os << i << ",\"" << to_string(basis.index(i)) << "\"," << fmt(std::real((*ladder.hamiltonian())(i, i))) << '\n';
  } else {
    os << "representation " << p << (basis.truncated() ? " cutoff " + std::to_string(basis.cutoff()) : std::string(" (complete)"))
       << "\ndimension " << basis.dimension() << "\nbasis";
    for (const auto& n : basis.indices()) os << ' ' << to_string(n);
    os << "\nspectrum (energy x multiplicity)\n";
    for (const auto& [e, mult] : spectrum) os << "  " << fmt(e) << " x " << mult << '\n';
  }
  emit(os.str(), c);
  if (!c.out.empty()) std::cout << "dimension " << basis.dimension() << '\n';
  return 0;
}

int cmd_coherent(const RunConfig& c) {
  const CoherentFamily family = family_from_name(c.target);
  if (c.label.empty()) throw ParameterError("a label is required (--omega, --z or --zeta)");
  const int r = c.r.value_or(static_cast<int>(c.label.size()));
  const int s_family = family == CoherentFamily::kp_fermionic ? -1 : 1;
  if (c.s && *c.s != s_family) throw ParameterError(std::string(family_name(family)) + " states require s = " + std::to_string(s_family));
  const StatisticsParams p(r, c.k.value_or(2), sign_from_int(s_family));
  const CoherentStateSpec spec(family, c.label, p, c.cutoff);
  const Tolerances tol = resolve_tolerances(c);

  ResidualReport checks = coherent_checks(spec, tol);
  // The transformed quadratures need an invertible Omega; at |u| = |v| (for example
  // zeta = 1 with r = 1) the uncertainty check does not apply.
  std::optional<IntelligentReport> ir;
  try {
    ir = coherent_uncertainty(spec, family == CoherentFamily::gk ? tol.get("uncertainty_gk") : tol.get("uncertainty_kp"));
    checks.merge(ir->checks, "uncertainty ");
  } catch (const DomainError& e) {
    checks.note(std::string("uncertainty check not applicable: ") + e.what());
  }
  const CoherentState st = build_state(spec);

  SuiteReport s{"coherent " + std::string(family_name(family))};
  s.absorb(checks, "");
  std::ostringstream os;
  if (c.format == "json") {
    json j = {{"state", state_to_json(st)},
              {"report", suite_json(s, false)},
              {"uncertainty", ir ? uncertainty_to_json(*ir) : json(nullptr)}};
    os << j.dump(2) << '\n';
  } else {
    if (c.format == "pretty") {
      os << "state " << family_name(family) << ' ' << p << " cutoff " << st.cutoff << " dimension " << st.amplitudes.size()
         << "\n";
      if (ir)
        os << "det sigma " << fmt(ir->rs.det_sigma) << "  det C " << fmt(ir->rs.det_c) << "  gap " << fmt(ir->rs.gap)
           << '\n';
    }
    os << render_suites({s}, c);
  }
  emit(os.str(), c);
  return s.pass() ? 0 : 1;
}

// ---------------------------------------------------------------- argument parsing

struct Flags {
  std::optional<int> r, k, cutoff, nmax;
  std::optional<std::string> s, energies, omega, z, zeta, format, out, config, suite, kind;
  std::optional<double> tol;
  bool quick = false, timing = false;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--r", f.r, "number of modes r");
  sub->add_option("--k", f.k, "representation label k");
  sub->add_option("--s", f.s, "statistics sign: +1 (bosonic) or -1 (fermionic)");
  sub->add_option("--cutoff", f.cutoff, "bosonic truncation (maximal total occupation)");
  sub->add_option("--energies", f.energies, "comma-separated mode energies e_1,...,e_r");
  sub->add_option("--tol", f.tol, "override every tolerance");
  sub->add_option("--format", f.format, "json | csv | pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  sub->add_option("--out", f.out, "write the report to this file");
  sub->add_option("--config", f.config, "JSON run configuration; flags override it");
  sub->add_flag("--timing", f.timing, "include wall time in reports");
}

int parse_sign(const std::string& s) {
  if (s == "+1" || s == "1" || s == "+") return 1;
  if (s == "-1" || s == "-") return -1;
  throw ParameterError("s must be +1 or -1");
}

RunConfig assemble(const std::string& command, const std::string& target, const Flags& f) {
  RunConfig c;
  if (f.config) {
    std::ifstream in(*f.config);
    if (!in) throw ParameterError("cannot read config file: " + *f.config);
    c = config_from_json(json::parse(in));
  }
  c.command = command;
  if (!target.empty()) c.target = target;
  if (f.suite) c.target = *f.suite;
  if (f.r) c.r = *f.r;
  if (f.k) c.k = *f.k;
  if (f.s) c.s = parse_sign(*f.s);
  if (f.cutoff) c.cutoff = *f.cutoff;
  if (f.nmax) c.nmax = *f.nmax;
  if (f.energies) c.energies = parse_real_list(*f.energies);
  for (const auto* l : {&f.omega, &f.z, &f.zeta})
    if (*l) c.label = parse_complex_list(**l);
  if (f.tol) c.tol = *f.tol;
  if (f.format) c.format = *f.format;
  if (f.out) c.out = *f.out;
  if (f.kind) c.kind = *f.kind;
  if (f.quick) c.quick = true;
  if (f.timing) c.timing = true;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized A_r statistics: Fock representations, coherent states and uncertainty checks"};
  app.require_subcommand(1);
  Flags f;
  std::string suite_pos, family_pos;

  auto* rep = app.add_subcommand("rep", "build a representation and list basis and spectrum");
  add_common(rep, f);

  auto* verify = app.add_subcommand("verify", "run a verification suite over a parameter grid");
  add_common(verify, f);
  verify->add_option("target", suite_pos, "algebra | bargmann | measures | coherent | uncertainty | all")
      ->check(CLI::IsMember({"algebra", "bargmann", "measures", "coherent", "uncertainty", "all"}));
  verify->add_option("--suite", f.suite, "same as the positional target")
      ->check(CLI::IsMember({"algebra", "bargmann", "measures", "coherent", "uncertainty", "all"}));
  verify->add_flag("--quick", f.quick, "smaller grid and degrees");
  verify->add_option("--kind", f.kind, "measure kind: gk | kp-simplex | kp-fermionic");
  verify->add_option("--nmax", f.nmax, "largest total moment index");

  auto* coherent = app.add_subcommand("coherent", "build a coherent state and run its checks");
  add_common(coherent, f);
  coherent->add_option("family", family_pos, "gk | kp-bosonic | kp-fermionic")
      ->required()
      ->check(CLI::IsMember({"gk", "kp-bosonic", "kp-fermionic"}));
  coherent->add_option("--omega", f.omega, "GK label: comma-separated complex numbers (re+imj or mod:arg)");
  coherent->add_option("--z", f.z, "KP bosonic label, inside the unit ball");
  coherent->add_option("--zeta", f.zeta, "KP fermionic label");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*rep) return cmd_rep(assemble("rep", "", f));
    if (*verify) return cmd_verify(assemble("verify", suite_pos, f));
    if (*coherent) return cmd_coherent(assemble("coherent", family_pos, f));
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
