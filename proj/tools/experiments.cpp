#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "lipteich/lipteich.hpp"
#include "rng.hpp"

namespace lipteich::tools {

namespace {

constexpr double kLn10 = std::numbers::ln10;

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1)));
  return out;
}

std::vector<double> lin_grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
  return out;
}

void check(ExperimentResult& r, bool ok, const std::string& what) {
  if (!ok) r.violations.push_back(what);
}

std::string fmt(double x) { return format_double(x); }

// ---------------------------------------------------------------------------

ExperimentResult hexagon_selftest(const ExperimentConfig& cfg) {
  const int samples = cfg.samples.value_or(10000);
  Rng rng(cfg.seed);
  ExperimentResult r;
  r.header = {"kind", "index", "x1", "x2", "x3", "value", "residual"};
  double worst_hex = 0.0, worst_pent = 0.0, worst_fermi = 0.0;

  for (int i = 0; i < samples; ++i) {
    const double a = rng.log_uniform(1e-3, 3.0);
    const double ap = rng.log_uniform(1e-3, 3.0);
    const double c = rng.log_uniform(1e-3, 10.0);
    const double w = std::acosh((std::cosh(c) + std::cosh(a) * std::cosh(ap)) / (std::sinh(a) * std::sinh(ap)));
    const double out = hexagon_opposite(a, ap, w);
    const double lhs = std::cosh(out) + std::cosh(a) * std::cosh(ap);
    const double residual = std::fabs(lhs - std::sinh(a) * std::sinh(ap) * std::cosh(w)) / lhs;
    worst_hex = std::max(worst_hex, residual);
    r.rows.push_back({std::string("hexagon"), std::int64_t{i}, a, ap, w, out, residual});
  }

  for (int i = 0; i < samples; ++i) {
    const double a = rng.log_uniform(1e-3, 3.0);
    const double c = rng.log_uniform(1e-3, 10.0);
    const double u = pentagon_side_inverse(c, a);
    const double out = pentagon_side(u, a);
    const double identity = std::fabs(std::cosh(out) - std::sinh(u) * std::sinh(a)) / std::cosh(out);
    const double round_trip = std::fabs(pentagon_side_inverse(out, a) - u) / std::max(1.0, u);
    const double residual = std::max(identity, round_trip);
    worst_pent = std::max(worst_pent, residual);
    r.rows.push_back({std::string("pentagon"), std::int64_t{i}, u, a, 0.0, out, residual});
  }

  // Fermi coordinates about the imaginary axis: offset d at height e^u sits
  // at e^u (-tanh d, sech d).
  for (int i = 0; i < std::max(1, samples / 10); ++i) {
    const double d1 = rng.uniform(-3.0, 3.0);
    const double d2 = rng.uniform(-3.0, 3.0);
    const double du = rng.uniform(0.0, 5.0);
    const double x1 = -std::tanh(d1), y1 = 1.0 / std::cosh(d1);
    const double x2 = -std::exp(du) * std::tanh(d2), y2 = std::exp(du) / std::cosh(d2);
    const double oracle = 2.0 * std::asinh(std::hypot(x1 - x2, y1 - y2) / (2.0 * std::sqrt(y1 * y2)));
    const double value = fermi_distance(d1, d2, du);
    const double residual = std::fabs(value - oracle);
    worst_fermi = std::max(worst_fermi, residual);
    r.rows.push_back({std::string("fermi"), std::int64_t{i}, d1, d2, du, value, residual});
  }

  r.constants = {{"max_hexagon_residual", worst_hex},
                 {"max_pentagon_residual", worst_pent},
                 {"max_fermi_residual", worst_fermi}};
  check(r, worst_hex <= kResidualTol, "hexagon residual " + fmt(worst_hex) + " > 1e-9");
  check(r, worst_pent <= kResidualTol, "pentagon residual " + fmt(worst_pent) + " > 1e-9");
  check(r, worst_fermi <= kResidualTol, "fermi residual " + fmt(worst_fermi) + " > 1e-9");
  r.summary = "max residual: hexagon " + fmt(worst_hex) + ", pentagon " + fmt(worst_pent) + ", fermi " +
              fmt(worst_fermi);
  return r;
}

// ---------------------------------------------------------------------------

const double kAnnulusTwists[] = {0.0, 10.0, 1e3, 1e6, 1e8};

struct AnnulusSweep {
  std::vector<Row> rows;
  double max_gap = 0.0;
  double identity = 0.0;
};

AnnulusSweep annulus_sweep(double lo, double hi, int grid, double eps0) {
  AnnulusSweep s;
  const auto ls = log_grid(lo, hi, grid);
  for (double l1 : ls) {
    for (double l2 : ls) {
      for (double dt : kAnnulusTwists) {
        const AnnulusPoint a(0.0, l1, eps0);
        const AnnulusPoint b(dt, l2, eps0);
        const double brute = dla_scan(a, b).value;
        const MetricEstimate est = dla_estimate(a, b);
        const double gap = std::fabs(brute - est.value);
        s.max_gap = std::max(s.max_gap, gap);
        if (est.witness == "case-ii") {
          const double s1 = std::min(l1, l2), s2 = std::max(l1, l2);
          const double lhs = std::log(dt * s2 / std::log(1.0 / s1));
          const double rhs = std::log(s2 / s1) + std::log(dt * s1 / std::log(1.0 / s1));
          s.identity = std::max(s.identity, std::fabs(lhs - rhs));
        }
        s.rows.push_back({l1, 0.0, l2, dt, brute, est.value, gap});
      }
    }
  }
  return s;
}

ExperimentResult annulus_lemma(const ExperimentConfig& cfg) {
  const int grid = cfg.grid.value_or(9);
  const double lo = cfg.l_min.value_or(1e-6);
  const double hi = std::min(cfg.l_max.value_or(0.05), cfg.eps.eps1);
  ExperimentResult r;
  r.header = {"l1", "t1", "l2", "t2", "brute", "estimate", "gap"};
  AnnulusSweep coarse = annulus_sweep(lo, hi, grid, cfg.eps.eps0);
  const AnnulusSweep fine = annulus_sweep(lo, hi, 2 * grid - 1, cfg.eps.eps0);
  r.rows = std::move(coarse.rows);
  const double change =
      coarse.max_gap > 0.0 ? std::fabs(fine.max_gap - coarse.max_gap) / coarse.max_gap : fine.max_gap;
  const double identity = std::max(coarse.identity, fine.identity);
  r.constants = {{"max_gap", coarse.max_gap},
                 {"max_gap_refined", fine.max_gap},
                 {"refinement_change", change},
                 {"case_ii_identity", identity}};
  check(r, std::isfinite(coarse.max_gap) && std::isfinite(fine.max_gap), "non-finite gap");
  check(r, change < kRefinementChange, "gap changed by " + fmt(100.0 * change) + "% under refinement");
  check(r, identity <= kCaseIdentityTol, "case-ii identity residual " + fmt(identity));
  r.summary = "max gap " + fmt(coarse.max_gap) + " (refined " + fmt(fine.max_gap) + ")";
  return r;
}

// ---------------------------------------------------------------------------

ExperimentResult half_plane_compare(const ExperimentConfig& cfg) {
  const int grid = cfg.grid.value_or(3);
  const double lo = cfg.l_min.value_or(1e-4);
  const double hi = std::min(cfg.l_max.value_or(1e-2), cfg.eps.eps1);
  ExperimentResult r;
  r.header = {"l",          "dt",          "annulus_exact",   "annulus_estimate", "half_plane_exact",
              "half_plane_estimate", "annulus_slope", "half_plane_slope"};
  double ann_lo = std::numeric_limits<double>::infinity(), ann_hi = -ann_lo;
  double hp_lo = ann_lo, hp_hi = -ann_lo;
  for (double l : log_grid(lo, hi, grid)) {
    double prev_ann = 0.0, prev_hp = 0.0;
    for (int k = 0; k <= 8; ++k) {
      const double dt = std::pow(10.0, k);
      const AnnulusPoint a(0.0, l, cfg.eps.eps0);
      const AnnulusPoint b(dt, l, cfg.eps.eps0);
      const double ann = dla_scan(a, b).value;
      const double hp = half_plane_distance(a, b);
      Row row{l, dt, ann, dla_estimate(a, b).value, hp, half_plane_estimate(a, b), std::string{}, std::string{}};
      if (k > 0) {
        const double ann_slope = (ann - prev_ann) / kLn10;
        const double hp_slope = (hp - prev_hp) / kLn10;
        row[6] = ann_slope;
        row[7] = hp_slope;
        if (k >= 7) {  // both endpoints of the increment at |dt| >= 1e6
          ann_lo = std::min(ann_lo, ann_slope);
          ann_hi = std::max(ann_hi, ann_slope);
          hp_lo = std::min(hp_lo, hp_slope);
          hp_hi = std::max(hp_hi, hp_slope);
        }
      }
      prev_ann = ann;
      prev_hp = hp;
      r.rows.push_back(std::move(row));
    }
  }
  r.constants = {{"annulus_slope_min", ann_lo},
                 {"annulus_slope_max", ann_hi},
                 {"half_plane_slope_min", hp_lo},
                 {"half_plane_slope_max", hp_hi}};
  const double ann_dev = std::max(std::fabs(ann_lo - 1.0), std::fabs(ann_hi - 1.0));
  const double hp_dev = std::max(std::fabs(hp_lo - 2.0), std::fabs(hp_hi - 2.0)) / 2.0;
  check(r, ann_dev <= kSlopeTolerance, "annulus slope off 1 by " + fmt(ann_dev));
  check(r, hp_dev <= kSlopeTolerance, "half-plane slope off 2 by " + fmt(100.0 * hp_dev) + "%");
  r.summary = "slopes for |dt| >= 1e6: annulus [" + fmt(ann_lo) + ", " + fmt(ann_hi) + "], half-plane [" +
              fmt(hp_lo) + ", " + fmt(hp_hi) + "]";
  return r;
}

// ---------------------------------------------------------------------------

std::vector<std::complex<double>> torus_grid(int n) {
  std::vector<std::complex<double>> out;
  for (double re : lin_grid(-0.5, 0.5, n)) {
    for (double im : lin_grid(0.5, 2.0, n)) out.emplace_back(re, im);
  }
  return out;
}

ExperimentResult torus_equality(const ExperimentConfig& cfg) {
  const int grid = cfg.grid.value_or(10);
  const int cutoff = cfg.cutoff.value_or(200);
  const FlatTorus base({0.0, 1.0});
  ExperimentResult r;
  r.header = {"re", "im", "dT", "dL", "diff", "witness_T", "witness_L"};
  double worst = 0.0;
  for (auto tau : torus_grid(grid)) {
    const FlatTorus t(tau);
    const MetricEstimate dt = flat_torus_dt(base, t, cutoff);
    const MetricEstimate dl = flat_torus_dl(base, t, cutoff);
    const double diff = std::fabs(dt.value - dl.value);
    worst = std::max(worst, diff);
    r.rows.push_back({tau.real(), tau.imag(), dt.value, dl.value, diff, dt.witness, dl.witness});
  }
  r.constants = {{"max_diff", worst}};
  check(r, worst <= kTorusEqualityTol, "|dT - dL| reached " + fmt(worst));
  r.summary = "max |dT - dL| " + fmt(worst);
  return r;
}

ExperimentResult wolpert(const ExperimentConfig& cfg) {
  const int grid = cfg.grid.value_or(10);
  const int cutoff = cfg.cutoff.value_or(200);
  const FlatTorus base({0.0, 1.0});
  ExperimentResult r;
  r.header = {"re", "im", "direction", "lipschitz", "dilatation", "margin", "holds"};
  int violations = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  for (auto tau : torus_grid(grid)) {
    const FlatTorus t(tau);
    for (const bool forward : {true, false}) {
      const WolpertReport w = forward ? wolpert_check(base, t, cutoff, kWolpertTol) : wolpert_check(t, base, cutoff, kWolpertTol);
      violations += w.holds ? 0 : 1;
      min_margin = std::min(min_margin, w.margin);
      r.rows.push_back({tau.real(), tau.imag(), std::string(forward ? "forward" : "backward"), w.lipschitz,
                        w.dilatation, w.margin, std::int64_t{w.holds ? 1 : 0}});
    }
  }
  r.constants = {{"violations", violations}, {"min_margin", min_margin}};
  check(r, violations == 0, std::to_string(violations) + " Wolpert violations");
  r.summary = std::to_string(violations) + " violations, min margin " + fmt(min_margin);
  return r;
}

// ---------------------------------------------------------------------------

FNPoint sample_thick(Rng& rng, double lo, double hi, double twist_max, std::span<const CurveClass> candidates,
                     double floor) {
  for (;;) {
    const double l = rng.log_uniform(lo, hi);
    const double t = rng.uniform(-twist_max, twist_max);
    FNPoint p = FNPoint::torus(l, t * l);
    const bool thick = std::all_of(candidates.begin(), candidates.end(),
                                   [&](const CurveClass& c) { return curve_length(p, c) >= floor; });
    if (thick) return p;
  }
}

ExperimentResult thick_compare(const ExperimentConfig& cfg) {
  const int samples = cfg.samples.value_or(100);
  const int cutoff = cfg.cutoff.value_or(16);
  const double lo = cfg.l_min.value_or(cfg.eps.eps0);
  const double hi = cfg.l_max.value_or(4.0);
  const double twist_max = cfg.twist_max.value_or(8.0);
  const auto candidates = enumerate_slopes(cutoff);
  Rng rng(cfg.seed);
  ExperimentResult r;
  r.header = {"index", "l_sigma", "s_sigma", "l_tau", "s_tau", "dL", "q3", "q4", "marking_distance", "max_gap"};
  double g[4] = {0.0, 0.0, 0.0, 0.0};
  for (int i = 0; i < samples; ++i) {
    const FNPoint s = sample_thick(rng, lo, hi, twist_max, candidates, cfg.eps.eps0);
    const FNPoint t = sample_thick(rng, lo, hi, twist_max, candidates, cfg.eps.eps0);
    const double d = dl_adaptive(s, t, cfg.eps).estimate.value;
    const double q3 = thick_quantity(s, t, ThickQuantity::SigmaMarking, candidates, cfg.eps).value;
    const double q4 = thick_quantity(s, t, ThickQuantity::TauMarking, candidates, cfg.eps).value;
    const double md = marking_distance(short_marking(s, candidates), short_marking(t, candidates));
    const double gaps[4] = {std::fabs(d - q3), std::fabs(d - q4), std::fabs(q3 - q4), std::fabs(md - q3)};
    for (int k = 0; k < 4; ++k) g[k] = std::max(g[k], gaps[k]);
    r.rows.push_back({std::int64_t{i}, s[0].length, s[0].twist, t[0].length, t[0].twist, d, q3, q4, md,
                      *std::max_element(gaps, gaps + 4)});
  }
  const double c = *std::max_element(g, g + 4);
  r.constants = {{"dl_q3", g[0]}, {"dl_q4", g[1]}, {"q3_q4", g[2]}, {"md_q3", g[3]}, {"constant", c}};
  check(r, c <= kThickComparabilityBound, "thick gap " + fmt(c) + " exceeds " + fmt(kThickComparabilityBound));
  r.summary = "thick comparability constant " + fmt(c);
  return r;
}

// ---------------------------------------------------------------------------

ExperimentResult prodreg_error(const ExperimentConfig& cfg) {
  const int samples = cfg.samples.value_or(50);
  const double hi = std::min(cfg.l_max.value_or(cfg.eps.eps1), cfg.eps.eps1);
  const double lo = cfg.l_min.value_or(1e-5);
  const double twist_max = cfg.twist_max.value_or(1e6);
  const std::vector<CurveClass> gamma{kMeridian};
  Rng rng(cfg.seed);
  ExperimentResult r;
  r.header = {"l_floor", "index", "l_sigma", "t_sigma", "l_tau", "t_tau", "dL", "dL_gamma", "error"};

  std::vector<double> floors;
  for (double f = std::min(1e-2, hi / 2.0); f > lo * (1.0 - 1e-9); f /= 10.0) floors.push_back(f);
  if (floors.empty() || floors.back() > lo * (1.0 + 1e-9)) floors.push_back(lo);

  double c_max = 0.0, c_min = std::numeric_limits<double>::infinity();
  for (double floor : floors) {
    double c = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double l1 = rng.log_uniform(floor, hi);
      const double l2 = rng.log_uniform(floor, hi);
      const double t1 = rng.uniform(-twist_max, twist_max);
      const double t2 = rng.uniform(-twist_max, twist_max);
      const FNPoint s = FNPoint::torus(l1, t1 * l1);
      const FNPoint t = FNPoint::torus(l2, t2 * l2);
      const double d = dl_adaptive(s, t, cfg.eps).estimate.value;
      const double dg = dl_gamma(s, t, gamma, cfg.eps).value;
      const double err = std::fabs(d - dg);
      c = std::max(c, err);
      r.rows.push_back({floor, std::int64_t{i}, l1, t1, l2, t2, d, dg, err});
    }
    r.constants["error_floor_" + fmt(floor)] = c;
    c_max = std::max(c_max, c);
    c_min = std::min(c_min, c);
  }
  const double stability = c_min > 0.0 ? c_max / c_min : 1.0;
  r.constants["constant"] = c_max;
  r.constants["stability"] = stability;
  check(r, c_max <= kProductRegionBound, "|dL - dL_gamma| reached " + fmt(c_max));
  check(r, stability <= kProductStability, "error varies by x" + fmt(stability) + " across l floors");
  r.summary = "product-region constant " + fmt(c_max) + ", spread across floors x" + fmt(stability);
  return r;
}

// ---------------------------------------------------------------------------

ExperimentResult thm1_divergence(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.header = {"n", "P", "q", "dL", "closed_form", "dT_gamma"};
  const std::vector<CurveClass> gamma{kMeridian};
  std::vector<double> dls;
  double gap = 0.0, band_lo = std::numeric_limits<double>::infinity(), band_hi = -band_lo;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const double p = static_cast<double>(n) * n;
    const double q = n;
    const DivergentPair pair = divergent_pair_unchecked(p, q);
    const double d = dl_adaptive(pair.sigma, pair.tau, cfg.eps).estimate.value;
    const double closed = theorem1_closed_form(p, q);
    // Half the half-plane distance between (0, 1/l) and (T, 1/l); equals
    // dt_gamma wherever the pair is thin.
    const double inv_l = std::exp(p);
    const double dtg = 0.5 * upper_half_plane_distance({0.0, inv_l}, {static_cast<double>(pair.twists), inv_l});
    dls.push_back(d);
    gap = std::max(gap, std::fabs(d - closed));
    band_lo = std::min(band_lo, dtg - q);
    band_hi = std::max(band_hi, dtg - q);
    r.rows.push_back({std::int64_t{n}, p, q, d, closed, dtg});
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < dls.size(); ++i) {
    if (!(dls[i] < dls[i - 1])) {
      decreasing = false;
      r.violations.push_back("dL not decreasing: n=" + std::to_string(cfg.n_min + i - 1) + " -> " +
                             std::to_string(cfg.n_min + i) + " (" + fmt(dls[i - 1]) + " -> " + fmt(dls[i]) + ")");
    }
  }
  const double width = band_hi - band_lo;
  r.constants = {{"closed_form_gap", gap},
                 {"band_lo", band_lo},
                 {"band_hi", band_hi},
                 {"band_width", width},
                 {"decreasing", decreasing ? 1.0 : 0.0}};
  check(r, gap <= kThm1ClosedFormGap, "|dL - closed form| reached " + fmt(gap));
  check(r, width <= kThm1BandWidth, "dT_gamma - q band width " + fmt(width));
  r.summary = std::string("dL ") + (decreasing ? "decreasing" : "NOT decreasing") + ", max |dL - closed form| " +
              fmt(gap) + ", dT_gamma - q in [" + fmt(band_lo) + ", " + fmt(band_hi) + "]";
  return r;
}

// ---------------------------------------------------------------------------

Marking random_marking(Rng& rng) {
  CurveClass pants = kMeridian;
  CurveClass dual = kLongitude;
  const int steps = static_cast<int>(rng.integer(1, 6));
  for (int i = 0; i < steps; ++i) {
    const CurveClass& along = rng.integer(0, 1) == 0 ? kMeridian : kLongitude;
    std::int64_t k = rng.integer(-4, 3);
    if (k >= 0) ++k;
    pants = dehn_twist(pants, along, k);
    dual = dehn_twist(dual, along, k);
  }
  return {{pants}, {dual}};
}

ExperimentResult marking_distance_exp(const ExperimentConfig& cfg) {
  const int samples = cfg.samples.value_or(200);
  Rng rng(cfg.seed);
  ExperimentResult r;
  r.header = {"kind", "index", "mu_a", "mu_b", "mu_c", "d_ab", "d_bc", "d_ac", "slack"};
  const Marking base{{kMeridian}, {kLongitude}};

  double twist_dev = 0.0;
  for (int j = 0; j <= 20; ++j) {
    const std::int64_t k = std::int64_t{1} << j;
    const Marking twisted{{kMeridian}, {dehn_twist(kLongitude, kMeridian, k)}};
    const double md = marking_distance(base, twisted);
    const double lk = std::log(static_cast<double>(k));
    twist_dev = std::max(twist_dev, std::fabs(md - lk));
    r.rows.push_back({std::string("twist-family"), k, base.to_json(), twisted.to_json(), std::string{}, md,
                      std::string{}, lk, md - lk});
  }

  double slack = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const Marking m1 = random_marking(rng), m2 = random_marking(rng), m3 = random_marking(rng);
    const double d12 = marking_distance(m1, m2), d23 = marking_distance(m2, m3), d13 = marking_distance(m1, m3);
    const double excess = d13 - d12 - d23;
    slack = std::max(slack, excess);
    r.rows.push_back({std::string("triangle"), std::int64_t{i}, m1.to_json(), m2.to_json(), m3.to_json(), d12, d23,
                      d13, excess});
  }
  r.constants = {{"twist_family_deviation", twist_dev}, {"triangle_slack", slack}};
  check(r, twist_dev <= std::log(3.0) + 1e-12, "twist family strays from log k by " + fmt(twist_dev));
  check(r, slack <= kMarkingTriangleSlack, "quasi-triangle slack " + fmt(slack));
  r.summary = "quasi-triangle slack " + fmt(slack) + ", twist family within " + fmt(twist_dev) + " of log k";
  return r;
}

// ---------------------------------------------------------------------------

struct Entry {
  ExperimentInfo info;
  std::function<ExperimentResult(const ExperimentConfig&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"hexagon-selftest", "right-angled hexagon and pentagon identities; Fermi distance vs half-plane geometry",
        "samples=10000"},
       hexagon_selftest},
      {{"annulus-lemma", "exact annulus Lipschitz distance vs its two-case closed form",
        "grid=9 l_min=1e-6 l_max=0.05"},
       annulus_lemma},
      {{"half-plane-compare", "annulus estimate grows like log|dt|, hyperbolic half-plane like 2 log|dt|",
        "grid=3 l_min=1e-4 l_max=1e-2"},
       half_plane_compare},
      {{"torus-equality", "Teichmuller and Lipschitz distances coincide on flat tori", "grid=10 cutoff=200"},
       torus_equality},
      {{"wolpert", "Wolpert's inequality: length ratios are at most the dilatation", "grid=10 cutoff=200"}, wolpert},
      {{"thick-compare", "thick part: dL, marking ratios and log intersection agree up to a constant",
        "samples=100 cutoff=16 l_min=eps0 l_max=4 twist_max=8"},
       thick_compare},
      {{"prodreg-error", "product regions: dL vs the sup of annulus estimates on thin pairs",
        "samples=50 l_min=1e-5 l_max=eps1 twist_max=1e6"},
       prodreg_error},
      {{"thm1-divergence", "twisting a thin curve: dT grows like q while dL tracks log(1 + e^q / 2P)",
        "n_min=1 n_max=6"},
       thm1_divergence},
      {{"marking-distance", "log intersection of markings: twist growth and quasi-triangle inequality",
        "samples=200"},
       marking_distance_exp},
  };
  return entries;
}

struct CellWriter {
  std::ostream& out;
  void operator()(std::int64_t v) const { out << v; }
  void operator()(double v) const { out << format_double(v); }
  void operator()(const std::string& v) const {
    if (v.find_first_of(",\"\n") == std::string::npos) {
      out << v;
      return;
    }
    out << '"';
    for (char ch : v) {
      if (ch == '"') out << '"';
      out << ch;
    }
    out << '"';
  }
};

}  // namespace

const std::vector<ExperimentInfo>& experiment_catalogue() {
  static const std::vector<ExperimentInfo> infos = [] {
    std::vector<ExperimentInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

ExperimentResult run_experiment(std::string_view name, const ExperimentConfig& cfg) {
  for (const auto& e : registry()) {
    if (e.info.name == name) {
      ExperimentResult r = e.run(cfg);
      std::sort(r.rows.begin(), r.rows.end());
      return r;
    }
  }
  throw Error(ErrorCode::ConfigError, "unknown experiment '" + std::string(name) + "'");
}

void write_csv(const ExperimentResult& result, std::ostream& out) {
  for (std::size_t i = 0; i < result.header.size(); ++i) out << (i ? "," : "") << result.header[i];
  out << '\n';
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      std::visit(CellWriter{out}, row[i]);
    }
    out << '\n';
  }
}

std::string to_csv(const ExperimentResult& result) {
  std::ostringstream out;
  write_csv(result, out);
  return out.str();
}

}  // namespace lipteich::tools
