// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "arstat/arstat.hpp"

using namespace arstat;

namespace {

// Pinned tolerances and limits.
constexpr double kAlgebraTol = 1e-12;
constexpr double kAlgebraSeconds = 10.0;
constexpr double kHeisenbergTol = 1e-12;
constexpr double kBargmannTol = 1e-12;
constexpr double kMomentTol = 1e-6;
constexpr double kDirichletTol = 1e-8;
constexpr double kMeasuresSeconds = 60.0;
constexpr double kNormTol = 1e-10;
constexpr double kGkEigenTol = 1e-9;
constexpr double kClosedFormTol = 1e-10;
constexpr double kDisplacementBosonicTol = 1e-8;
constexpr double kDisplacementFermionicTol = 1e-12;
constexpr double kGkGapTol = 1e-8;
constexpr double kKpGapTol = 1e-6;
constexpr double kBoseRatioLow = 1.5;
constexpr double kBoseRatioHigh = 2.5;

StatisticsParams bos(int r, int k) { return {r, k, Sign::bosonic}; }
StatisticsParams fer(int r, int k) { return {r, k, Sign::fermionic}; }

struct Outcome {
  bool pass = true;
  int checks = 0;
  std::string detail;

  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = "first failure: " + what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string describe(const StatisticsParams& p) {
  return "r=" + std::to_string(p.r()) + " k=" + std::to_string(p.k()) + " s=" + (p.fermionic() ? "-1" : "+1");
}

std::vector<Complex> label(std::mt19937& rng, int r, double radius) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> z(static_cast<std::size_t>(r));
  double n2 = 0.0;
  for (auto& c : z) {
    c = {u(rng), u(rng)};
    n2 += std::norm(c);
  }
  for (auto& c : z) c *= radius / std::sqrt(n2);
  return z;
}

Outcome algebra() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  auto run = [&](const StatisticsParams& p, int cutoff) {
    const auto rep = verify_triple_relations(build_ladder_set(enumerate_basis(p, cutoff)), kAlgebraTol);
    worst = std::max(worst, rep.max_residual());
    o.require(rep.pass(), describe(p) + " max " + fmt("%.3g", rep.max_residual()));
  };
  for (int r = 1; r <= 3; ++r)
    for (int k = 2; k <= 6; ++k) run(fer(r, k), 0);
  for (int r = 1; r <= 3; ++r)
    for (int k = 1; k <= 6; ++k) run(bos(r, k), 8);
  const double elapsed = seconds_since(t0);
  o.require(elapsed < kAlgebraSeconds, "runtime " + fmt("%.2f s", elapsed));
  if (o.pass) o.detail = "max residual " + fmt("%.2e", worst) + ", " + fmt("%.2f s", elapsed);
  return o;
}

Outcome dimension() {
  Outcome o;
  for (int r = 1; r <= 4; ++r)
    for (int k = 2; k <= 8; ++k) {
      const auto dim = static_cast<std::uint64_t>(enumerate_basis(fer(r, k), 0).dimension());
      // (k-1+r)! / ((k-1)! r!) by exact integer multiplication.
      std::uint64_t want = 1;
      for (int i = 1; i <= r; ++i) want = want * static_cast<std::uint64_t>(k - 1 + i) / static_cast<std::uint64_t>(i);
      o.require(dim == want, describe(fer(r, k)) + " got " + std::to_string(dim) + " want " + std::to_string(want));
    }
  if (o.pass) o.detail = "r <= 4, 2 <= k <= 8 exact";
  return o;
}

Outcome heisenberg() {
  Outcome o;
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> e(0.1, 4.0);
  double worst = 0.0;
  for (int r = 1; r <= 3; ++r)
    for (int k = 1; k <= 4; ++k)
      for (Sign s : {Sign::bosonic, Sign::fermionic}) {
        if (s == Sign::fermionic && k < 2) continue;
        const StatisticsParams p(r, k, s);
        std::vector<double> energies;
        for (int i = 0; i < r; ++i) energies.push_back(e(rng));
        const LadderSet l = build_ladder_set(enumerate_basis(p, 5), energies);
        const auto rep = verify_heisenberg(l, kHeisenbergTol);
        worst = std::max(worst, rep.max_residual());
        o.require(rep.pass(), describe(p) + " max " + fmt("%.3g", rep.max_residual()));
        o.require(l.hamiltonian()->col(0).norm() < 1e-13, "H|0> " + describe(p));
      }
  if (o.pass) o.detail = "max residual " + fmt("%.2e", worst);
  return o;
}

Outcome bargmann() {
  Outcome o;
  double worst = 0.0;
  for (int r = 1; r <= 3; ++r)
    for (int k = 1; k <= 4; ++k) {
      for (auto real : {Realization::gk_omega, Realization::kp_bosonic_z}) {
        const auto rep = verify_realization_equivalence(real, bos(r, k), 6, kBargmannTol);
        worst = std::max(worst, rep.max_residual());
        o.require(rep.pass(), std::string(realization_name(real)) + " " + describe(bos(r, k)));
      }
      const auto f = fer(r, k + 1);
      const auto rep = verify_realization_equivalence(Realization::kp_fermionic_zeta, f, 0, kBargmannTol);
      worst = std::max(worst, rep.max_residual());
      o.require(rep.pass(), "kp-fermionic-zeta " + describe(f));
      o.require(verify_fermionic_pauli_bound(f, kBargmannTol).pass(), "pauli bound " + describe(f));
    }
  if (o.pass) o.detail = "max residual " + fmt("%.2e", worst);
  return o;
}

Outcome measures() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0, worst_d = 0.0;
  int count = 0;
  for (int r = 1; r <= 2; ++r)
    for (int k = 1; k <= 6; ++k) {
      std::vector<MeasureSpec> specs{MeasureSpec(MeasureKind::gk_bessel, bos(r, k))};
      if (k > r) specs.emplace_back(MeasureKind::kp_simplex, bos(r, k));
      if (k >= 2) specs.emplace_back(MeasureKind::kp_fermionic_mellin, fer(r, k));
      for (const auto& spec : specs) {
        const int top = spec.kind() == MeasureKind::kp_fermionic_mellin ? std::min(4, k - 1) : 4;
        for (const auto& n : graded_indices(r, top)) {
          const auto m = verify_moment(spec, n);
          worst = std::max(worst, m.rel_error);
          ++count;
          o.require(m.rel_error <= kMomentTol,
                    std::string(measure_name(spec.kind())) + " " + describe(spec.params()) + fmt(" rel %.3g", m.rel_error));
        }
      }
      if (k > r)
        for (const auto& n : graded_indices(r, 4)) {
          const auto d = verify_dirichlet_identity(r, k, n);
          worst_d = std::max(worst_d, d.rel_error);
          o.require(d.rel_error <= kDirichletTol, "dirichlet " + describe(bos(r, k)));
        }
    }
  const double elapsed = seconds_since(t0);
  o.require(elapsed < kMeasuresSeconds, "runtime " + fmt("%.2f s", elapsed));
  if (o.pass)
    o.detail = std::to_string(count) + " moments, max rel " + fmt("%.2e", worst) + ", dirichlet max " +
               fmt("%.2e", worst_d) + ", " + fmt("%.2f s", elapsed);
  return o;
}

Outcome coherent() {
  Outcome o;
  std::mt19937 rng(99);
  double worst_norm = 0.0, worst_eigen = 0.0, worst_closed = 0.0;
  for (int r = 1; r <= 2; ++r)
    for (int k = 2; k <= 4; ++k)
      for (double radius : {0.1, 0.3, 0.5}) {
        const auto w = label(rng, r, radius);
        const CoherentStateSpec gk(CoherentFamily::gk, w, bos(r, k));
        const FockBasis basis = coherent_basis(gk);
        const auto st = build_state(gk, basis);
        const double eig = gk_eigen_residual(st.amplitudes, build_ladder_set(basis), w);
        worst_eigen = std::max(worst_eigen, eig);
        o.require(eig <= kGkEigenTol, "gk eigen " + describe(gk.params));
        for (const auto& spec : {gk, CoherentStateSpec(CoherentFamily::kp_bosonic, w, bos(r, k)),
                                 CoherentStateSpec(CoherentFamily::kp_fermionic, label(rng, r, 3 * radius), fer(r, k))}) {
          const FockBasis b = coherent_basis(spec);
          const auto s = build_state(spec, b);
          const double dn = std::abs(s.amplitudes.norm() - 1.0);
          worst_norm = std::max(worst_norm, dn);
          o.require(dn <= kNormTol, "norm " + std::string(family_name(spec.family)) + " " + describe(spec.params));
          if (spec.family != CoherentFamily::gk) {
            const double mis = kp_normalization_mismatch(spec, b);
            worst_closed = std::max(worst_closed, mis);
            o.require(mis <= kClosedFormTol, "closed form " + std::string(family_name(spec.family)));
          }
        }
      }
  const CoherentStateSpec kb(CoherentFamily::kp_bosonic, {0.4}, bos(1, 2));
  const auto db = verify_displacement(kb, build_ladder_set(enumerate_basis(kb.params, 40)), kDisplacementBosonicTol);
  o.require(db.aligned_residual <= kDisplacementBosonicTol, "bosonic displacement " + fmt("%.3g", db.aligned_residual));
  double worst_f = 0.0;
  for (int k = 2; k <= 6; ++k) {
    const CoherentStateSpec kf(CoherentFamily::kp_fermionic, {Complex(0.8, -0.6)}, fer(1, k));
    const auto df = verify_displacement(kf, build_ladder_set(enumerate_basis(kf.params, 0)), kDisplacementFermionicTol);
    worst_f = std::max(worst_f, df.aligned_residual);
    o.require(df.aligned_residual <= kDisplacementFermionicTol, "fermionic displacement k=" + std::to_string(k));
  }
  if (o.pass)
    o.detail = "norm " + fmt("%.1e", worst_norm) + ", gk eigen " + fmt("%.1e", worst_eigen) + ", closed form " +
               fmt("%.1e", worst_closed) + ", displacement " + fmt("%.1e", db.aligned_residual) + " / " +
               fmt("%.1e", worst_f);
  return o;
}

Outcome uncertainty() {
  Outcome o;
  std::mt19937 rng(31);
  double worst_gk = 0.0, worst_kp = 0.0;
  for (int r = 1; r <= 2; ++r)
    for (int k = 1; k <= 4; ++k)
      for (double radius : {0.0, 0.25, 0.5}) {
        const auto rep = gk_uncertainty(CoherentStateSpec(CoherentFamily::gk, label(rng, r, radius), bos(r, k)), kGkGapTol);
        worst_gk = std::max(worst_gk, rep.rs.gap);
        o.require(rep.rs.pass && rep.checks.pass(), "gk " + rep.state_spec);
      }
  for (int r = 1; r <= 2; ++r)
    for (int k = 2; k <= 4; ++k) {
      const auto rep =
          kp_uncertainty(CoherentStateSpec(CoherentFamily::kp_fermionic, label(rng, r, 0.9), fer(r, k)), kKpGapTol);
      worst_kp = std::max(worst_kp, rep.rs.gap);
      o.require(rep.rs.pass && rep.checks.pass(), "kp-fermionic " + rep.state_spec);
    }
  for (const auto& spec : {CoherentStateSpec(CoherentFamily::kp_bosonic, {0.4}, bos(1, 2), 40),
                           CoherentStateSpec(CoherentFamily::kp_bosonic, {Complex(0.1, 0.25)}, bos(1, 3), 40),
                           CoherentStateSpec(CoherentFamily::kp_bosonic, {Complex(0.2, 0.1), Complex(0.1, -0.15)},
                                             bos(2, 2), 24)}) {
    const auto rep = kp_uncertainty(spec, kKpGapTol);
    worst_kp = std::max(worst_kp, rep.rs.gap);
    o.require(rep.rs.pass && rep.checks.pass(), "kp-bosonic " + rep.state_spec);
  }
  // Negative control: Fock |1> and |2> fail the equality but keep det sigma >= det C.
  for (int n : {1, 2}) {
    const LadderSet l = build_ladder_set(enumerate_basis(bos(1, 2), 4));
    Vector psi = Vector::Zero(l.dimension());
    psi(n) = 1.0;
    const auto rs = check_rs_minimization(psi, canonical_quadratures(l), kGkGapTol);
    o.require(!rs.pass, "fock |" + std::to_string(n) + "> passed the equality");
    o.require(rs.robertson_holds, "fock |" + std::to_string(n) + "> violates det sigma >= det C");
  }
  if (o.pass) o.detail = "gk gap " + fmt("%.1e", worst_gk) + ", kp gap " + fmt("%.1e", worst_kp) + ", fock control ok";
  return o;
}

Outcome bose_limit() {
  Outcome o;
  double lo = 1e300, hi = 0.0;
  for (Sign s : {Sign::bosonic, Sign::fermionic})
    for (int k : {25, 50, 100, 200, 400, 800}) {
      const double ratio = bose_limit_deviation({2, k, s}, 3) / bose_limit_deviation({2, 2 * k, s}, 3);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      o.require(ratio >= kBoseRatioLow && ratio <= kBoseRatioHigh, "k=" + std::to_string(k) + fmt(" ratio %.3f", ratio));
    }
  if (o.pass) o.detail = "halving ratio in [" + fmt("%.3f", lo) + ", " + fmt("%.3f", hi) + "]";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"algebra", algebra},       {"dimension", dimension},     {"heisenberg", heisenberg},
      {"bargmann", bargmann},     {"measures", measures},       {"coherent", coherent},
      {"uncertainty", uncertainty}, {"bose-limit", bose_limit}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s [%zu] %s (%d checks): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.checks,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
