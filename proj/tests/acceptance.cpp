// Acceptance suite: one PASS/FAIL line per criterion. `--criterion K` runs a
// single one; exit status is non-zero if any selected criterion fails.

#include <sys/wait.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "experiments.hpp"
#include "lipteich/lipteich.hpp"
#include "lipteich/io.hpp"

using namespace lipteich;
using namespace lipteich::tools;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("FAILED ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string fmt(double x) { return format_double(x); }

// Runs one experiment and folds its summary and threshold violations in.
ExperimentResult run_into(Verdict& v, const std::string& name, const ExperimentConfig& cfg = {}) {
  ExperimentResult r = run_experiment(name, cfg);
  v.note(name + ": " + r.summary);
  for (const auto& x : r.violations) v.require(false, x);
  return r;
}

// ---------------------------------------------------------------------------

Verdict trig_kernel() {
  Verdict v;
  const auto r = run_into(v, "hexagon-selftest");
  v.require(r.constants.at("max_hexagon_residual") <= 1e-9, "hexagon residual <= 1e-9");
  v.require(r.constants.at("max_pentagon_residual") <= 1e-9, "pentagon residual <= 1e-9");
  v.require(r.constants.at("max_fermi_residual") <= 1e-9, "fermi residual <= 1e-9");
  std::size_t hex = 0, pent = 0, fermi = 0;
  for (const auto& row : r.rows) {
    const auto& kind = std::get<std::string>(row[0]);
    hex += kind == "hexagon";
    pent += kind == "pentagon";
    fermi += kind == "fermi";
  }
  v.require(hex == 10000 && pent == 10000 && fermi >= 1000, "sample counts 10^4 / 10^4 / 10^3");
  return v;
}

Verdict holonomy() {
  Verdict v;
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> lu(std::log(0.05), std::log(3.0)), su(-3.0, 3.0);
  double cusp = 0.0, twist = 0.0;
  bool meridian_exact = true;
  const auto all = enumerate_slopes(7);
  const std::vector<CurveClass> slopes(all.begin(), all.begin() + 50);
  for (int i = 0; i < 100; ++i) {
    const double l = std::exp(lu(gen)), s = su(gen);
    const FNPoint p = FNPoint::torus(l, s);
    const FNPoint shifted = FNPoint::torus(l, s + l);
    cusp = std::max(cusp, std::fabs(build_representation(p).commutator_trace() + 2.0));
    meridian_exact = meridian_exact && curve_length(p, kMeridian) == l;
    for (const auto& c : slopes) {
      const double a = curve_length(shifted, c);
      const double b = curve_length(p, dehn_twist(c, kMeridian, -1));
      twist = std::max(twist, std::fabs(a - b) / b);
    }
  }
  v.note("max |tr[X,Y] + 2| " + fmt(cusp) + ", max full-twist relative gap " + fmt(twist) + " over 100 x " +
         std::to_string(slopes.size()));
  v.require(cusp <= 1e-9, "cusp relation");
  v.require(twist <= 1e-9, "full-twist invariance");
  v.require(slopes.size() == 50, "50 slopes");
  v.require(meridian_exact, "curve_length(1/0) == l exactly");
  return v;
}

Verdict metric_axioms() {
  Verdict v;
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> lu(std::log(0.2), std::log(4.0)), su(-3.0, 3.0);
  auto point = [&] { return FNPoint::torus(std::exp(lu(gen)), su(gen)); };
  const auto cands = enumerate_slopes(8);
  bool symmetric = true, self_one = true, monotone = true;
  double worst = -INFINITY;
  for (int i = 0; i < 1000; ++i) {
    const FNPoint a = point(), b = point(), c = point();
    const double ab = dl(a, b, cands).value, bc = dl(b, c, cands).value, ac = dl(a, c, cands).value;
    symmetric = symmetric && ab == dl(b, a, cands).value;
    worst = std::max(worst, ac - ab - bc);
    if (i < 100) self_one = self_one && lipschitz_sup(a, a, cands).value == 1.0;
    if (i < 30) {
      double prev = 0.0;
      for (int n : {1, 2, 4, 8, 16}) {
        const double d = dl(a, b, enumerate_slopes(n)).value;
        monotone = monotone && d >= prev;
        prev = d;
      }
    }
  }
  v.note("max triangle excess " + fmt(worst) + " over 1000 triples");
  v.require(symmetric, "dL symmetry exact");
  v.require(worst <= 1e-12, "triangle inequality within 1e-12");
  v.require(self_one, "Lambda(sigma, sigma) == 1");
  v.require(monotone, "monotone under nested candidate sets");
  return v;
}

Verdict torus_equality() {
  Verdict v;
  const auto r = run_into(v, "torus-equality");
  v.require(r.rows.size() == 100, "10 x 10 grid");
  v.require(r.constants.at("max_diff") <= 1e-6, "|dT - dL| <= 1e-6");
  // Independent maximization of the extremal-length ratio for i vs 2i.
  const std::complex<double> t1(0.0, 1.0), t2(0.0, 2.0);
  double best = 0.0;
  for (int p = -200; p <= 200; ++p) {
    for (int q = 0; q <= 200; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const double pd = p, qd = q;
      const double e1 = std::norm(pd + qd * t1) / t1.imag();
      const double e2 = std::norm(pd + qd * t2) / t2.imag();
      best = std::max(best, e2 / e1);
    }
  }
  const double oracle = 0.5 * std::log(best);
  const double lib = flat_torus_dt(FlatTorus(t1), FlatTorus(t2), 200).value;
  v.note("d_T(i, 2i) = " + fmt(lib) + ", direct " + fmt(oracle));
  v.require(std::fabs(lib - 0.5 * std::log(2.0)) <= 1e-9, "d_T(i, 2i) = 1/2 log 2");
  v.require(std::fabs(lib - oracle) <= 1e-9, "matches direct maximization");
  return v;
}

Verdict wolpert() {
  Verdict v;
  const auto r = run_into(v, "wolpert");
  v.require(r.constants.at("violations") == 0.0, "zero violations at 1e-9");
  return v;
}

Verdict annulus_lemma() {
  Verdict v;
  const auto r = run_into(v, "annulus-lemma");
  v.note("refinement change " + fmt(100.0 * r.constants.at("refinement_change")) + "%");
  v.require(std::isfinite(r.constants.at("max_gap")), "finite gap");
  v.require(r.constants.at("refinement_change") < 0.10, "change < 10% under refinement");
  v.require(r.constants.at("case_ii_identity") <= 1e-12, "case-ii identity within 1e-12");
  return v;
}

Verdict half_plane() {
  Verdict v;
  const auto r = run_into(v, "half-plane-compare");
  const double a_lo = r.constants.at("annulus_slope_min"), a_hi = r.constants.at("annulus_slope_max");
  const double h_lo = r.constants.at("half_plane_slope_min"), h_hi = r.constants.at("half_plane_slope_max");
  v.require(std::fabs(a_lo - 1.0) <= 0.1 && std::fabs(a_hi - 1.0) <= 0.1, "annulus slope within 10% of 1");
  v.require(std::fabs(h_lo / 2.0 - 1.0) <= 0.1 && std::fabs(h_hi / 2.0 - 1.0) <= 0.1,
            "half-plane slope within 10% of 2");
  return v;
}

Verdict divergence() {
  Verdict v;
  ExperimentConfig cfg;
  cfg.seed = 7;
  const auto r = run_into(v, "thm1-divergence", cfg);
  v.require(r.rows.size() == 6, "n = 1..6");
  v.require(r.constants.at("decreasing") == 1.0, "dL strictly decreasing");
  v.require(r.constants.at("closed_form_gap") <= kThm1ClosedFormGap, "within recorded constant of closed form");
  v.require(r.constants.at("band_width") <= 2.0, "dT_gamma - q band width <= 2");
  return v;
}

Verdict product_regions() {
  Verdict v;
  const auto r = run_into(v, "prodreg-error");
  v.require(r.constants.at("constant") <= kProductRegionBound, "bounded by recorded constant");
  v.require(r.constants.at("stability") <= 2.0, "stable within x2 as l shrinks");
  return v;
}

Verdict thick() {
  Verdict v;
  ExperimentConfig first, second;
  first.seed = 1;
  second.seed = 2;
  const double c1 = run_into(v, "thick-compare", first).constants.at("constant");
  const double c2 = run_into(v, "thick-compare", second).constants.at("constant");
  v.note("constants " + fmt(c1) + " (seed 1), " + fmt(c2) + " (seed 2)");
  v.require(c1 <= kThickComparabilityBound && c2 <= kThickComparabilityBound, "bounded by recorded constant");
  v.require(c2 <= 1.5 * c1, "re-drawn constant within x1.5");
  return v;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Verdict determinism() {
  Verdict v;
  ExperimentConfig cfg;
  cfg.seed = 11;
  cfg.samples = 30;
  for (const char* name : {"hexagon-selftest", "thick-compare", "marking-distance"}) {
    v.require(to_csv(run_experiment(name, cfg)) == to_csv(run_experiment(name, cfg)),
              std::string(name) + " in-process repeat");
  }
#ifdef LIPTEICH_CLI_PATH
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path a = dir / "lipteich_accept_a.csv", b = dir / "lipteich_accept_b.csv";
  const fs::path cfg_file = dir / "lipteich_accept.cfg";
  std::ofstream(cfg_file) << "# determinism check\nsamples=20\nseed=5\n";
  for (const auto& out : {a, b}) {
    const std::string cmd = std::string(LIPTEICH_CLI_PATH) + " run thick-compare --config " + cfg_file.string() +
                            " --out " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    v.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "CLI run exits 0");
  }
  const std::string sa = slurp(a), sb = slurp(b);
  v.require(!sa.empty() && sa == sb, "CLI output byte-identical");
  v.note("CLI CSV " + std::to_string(sa.size()) + " bytes, identical: " + (sa == sb ? "yes" : "no"));
  fs::remove(a);
  fs::remove(b);
  fs::remove(cfg_file);
#endif
  return v;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Verdict()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "trig kernel residuals", trig_kernel},
      {2, "holonomy on (1,1)", holonomy},
      {3, "metric axioms", metric_axioms},
      {4, "flat torus dT = dL", torus_equality},
      {5, "Wolpert inequality", wolpert},
      {6, "annulus lemma", annulus_lemma},
      {7, "half-plane slopes", half_plane},
      {8, "twist divergence", divergence},
      {9, "product regions", product_regions},
      {10, "thick comparability", thick},
      {11, "CLI determinism", determinism},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-11)")->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    all_pass = all_pass && v.pass;
    std::cout << "criterion " << c.id << " [" << c.title << "]: " << (v.pass ? "PASS" : "FAIL") << " | " << v.detail
              << std::endl;
  }
  return all_pass ? 0 : 1;
}
