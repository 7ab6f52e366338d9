#include "lipteich/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "lipteich/error.hpp"

namespace lipteich {

namespace {

void require_same_surface(const FNPoint& x, const FNPoint& y) {
  if (!(x.sig() == y.sig())) throw Error(ErrorCode::InvalidArgument, "points lie on different surfaces");
}

void sort_unique(std::vector<CurveClass>& curves) {
  std::sort(curves.begin(), curves.end());
  curves.erase(std::unique(curves.begin(), curves.end()), curves.end());
}

}  // namespace

MetricEstimate lipschitz_sup(const FNPoint& from, const FNPoint& to, std::span<const CurveClass> candidates) {
  require_same_surface(from, to);
  if (candidates.empty()) throw Error(ErrorCode::InsufficientCandidates, "lipschitz_sup needs candidates");
  double best = -std::numeric_limits<double>::infinity();
  const CurveClass* witness = nullptr;
  for (const auto& c : candidates) {
    const double ratio = curve_length(to, c) / curve_length(from, c);
    if (ratio > best) {
      best = ratio;
      witness = &c;
    }
  }
  return {best, Guarantee::LowerBoundByTruncation, witness->to_string(), {}};
}

MetricEstimate dl(const FNPoint& sigma, const FNPoint& tau, std::span<const CurveClass> candidates) {
  const MetricEstimate forward = lipschitz_sup(sigma, tau, candidates);
  const MetricEstimate backward = lipschitz_sup(tau, sigma, candidates);
  const bool use_forward = forward.value >= backward.value;
  const MetricEstimate& pick = use_forward ? forward : backward;
  return {std::log(pick.value), Guarantee::LowerBoundByTruncation,
          pick.witness + (use_forward ? " (sigma->tau)" : " (tau->sigma)"), {}};
}

std::vector<CurveClass> local_slopes(const FNPoint& point, int cutoff) {
  require_once_punctured_torus(point.sig(), "local_slopes");
  const double turns = point[0].twist / point[0].length;
  if (!(std::fabs(turns) < 4e18)) throw Error(ErrorCode::Overflow, "twist too large to recentre slopes");
  const std::int64_t m = std::llround(turns);
  std::vector<CurveClass> out;
  for (const auto& c : enumerate_slopes(cutoff)) {
    try {
      out.push_back(dehn_twist(c, kMeridian, m));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Overflow) throw;
    }
  }
  return out;
}

std::vector<CurveClass> candidate_family(const FNPoint& sigma, const FNPoint& tau, int cutoff, CollarConstants eps) {
  require_same_surface(sigma, tau);
  std::vector<CurveClass> family = enumerate_slopes(cutoff);
  for (const FNPoint* point : {&sigma, &tau}) {
    auto local = local_slopes(*point, cutoff);
    family.insert(family.end(), local.begin(), local.end());
  }
  sort_unique(family);

  std::vector<CurveClass> thin = thin_curves(sigma, eps.eps1, family);
  for (const auto& c : thin_curves(tau, eps.eps1, family)) thin.push_back(c);
  sort_unique(thin);

  std::vector<CurveClass> extra;
  for (const FNPoint* point : {&sigma, &tau}) {
    for (const auto& c : short_marking(*point, family).curves()) {
      extra.push_back(c);
      for (const auto& gamma : thin) {
        for (std::int64_t k : {-3, -2, -1, 1, 2, 3}) {
          try {
            extra.push_back(dehn_twist(c, gamma, k));
          } catch (const Error& e) {
            if (e.code() != ErrorCode::Overflow) throw;
          }
        }
      }
    }
  }
  family.insert(family.end(), extra.begin(), extra.end());
  sort_unique(family);
  return family;
}

AdaptiveDl dl_adaptive(const FNPoint& sigma, const FNPoint& tau, CollarConstants eps, double tol, int start_cutoff,
                       int max_cutoff) {
  int cutoff = std::max(1, start_cutoff);
  MetricEstimate current = dl(sigma, tau, candidate_family(sigma, tau, cutoff, eps));
  while (cutoff < max_cutoff) {
    cutoff *= 2;
    MetricEstimate wider = dl(sigma, tau, candidate_family(sigma, tau, cutoff, eps));
    const bool stable = std::fabs(wider.value - current.value) < tol;
    current = std::move(wider);
    if (stable) return {std::move(current), cutoff};
  }
  current.warnings.push_back("slope cutoff cap reached before stabilising");
  return {std::move(current), cutoff};
}

// ---------------------------------------------------------------------------

MetricEstimate thick_quantity(const FNPoint& sigma, const FNPoint& tau, ThickQuantity which,
                              std::span<const CurveClass> candidates, CollarConstants eps) {
  require_same_surface(sigma, tau);
  const bool use_sigma = which == ThickQuantity::SigmaMarking;
  const FNPoint& base = use_sigma ? sigma : tau;
  const FNPoint& other = use_sigma ? tau : sigma;
  const Marking marking = short_marking(base, candidates);

  double best = -std::numeric_limits<double>::infinity();
  std::string witness;
  for (const auto& alpha : marking.curves()) {
    const double ratio = curve_length(other, alpha) / curve_length(base, alpha);
    if (ratio > best) {
      best = ratio;
      witness = alpha.to_string();
    }
  }
  MetricEstimate out{std::log(best), Guarantee::AdditiveConstantEstimate, witness, {}};
  if (!thin_curves(sigma, eps.eps1, candidates).empty() || !thin_curves(tau, eps.eps1, candidates).empty()) {
    out.warnings.push_back("not-thick");
  }
  return out;
}

double marking_distance(const Marking& m1, const Marking& m2, const SurfaceSig& sig) {
  const std::int64_t i = marking_intersection(sig, m1, m2);
  return i == 0 ? 0.0 : std::log(static_cast<double>(i));
}

// ---------------------------------------------------------------------------

FlatTorus::FlatTorus(std::complex<double> modulus) : modulus_(modulus) {
  if (!(modulus.imag() > 0.0)) throw Error(ErrorCode::InvalidArgument, "flat torus modulus needs Im > 0");
}

double FlatTorus::extremal_length(const CurveClass& c) const noexcept {
  return std::norm(static_cast<double>(c.p()) + static_cast<double>(c.q()) * modulus_) / modulus_.imag();
}

double FlatTorus::flat_length(const CurveClass& c) const noexcept {
  return std::abs(static_cast<double>(c.p()) + static_cast<double>(c.q()) * modulus_) / std::sqrt(modulus_.imag());
}

namespace {

template <typename F>
std::pair<double, CurveClass> max_ratio(int cutoff, F&& ratio) {
  double best = -std::numeric_limits<double>::infinity();
  CurveClass witness = kMeridian;
  for (const auto& c : enumerate_slopes(cutoff)) {
    const double r = ratio(c);
    if (r > best) {
      best = r;
      witness = c;
    }
  }
  return {best, witness};
}

}  // namespace

MetricEstimate flat_torus_dt(const FlatTorus& t1, const FlatTorus& t2, int cutoff) {
  const auto [k, w] = max_ratio(cutoff, [&](const CurveClass& c) { return t2.extremal_length(c) / t1.extremal_length(c); });
  return {0.5 * std::log(k), Guarantee::LowerBoundByTruncation, w.to_string(), {}};
}

MetricEstimate flat_torus_dl(const FlatTorus& t1, const FlatTorus& t2, int cutoff) {
  const auto [f, wf] = max_ratio(cutoff, [&](const CurveClass& c) { return t2.flat_length(c) / t1.flat_length(c); });
  const auto [b, wb] = max_ratio(cutoff, [&](const CurveClass& c) { return t1.flat_length(c) / t2.flat_length(c); });
  if (f >= b) return {std::log(f), Guarantee::LowerBoundByTruncation, wf.to_string(), {}};
  return {std::log(b), Guarantee::LowerBoundByTruncation, wb.to_string(), {}};
}

WolpertReport wolpert_check(const FlatTorus& t1, const FlatTorus& t2, int cutoff, double tol) {
  const double lipschitz =
      max_ratio(cutoff, [&](const CurveClass& c) { return t2.flat_length(c) / t1.flat_length(c); }).first;
  const double dilatation = std::exp(2.0 * flat_torus_dt(t1, t2, cutoff).value);
  return {lipschitz <= dilatation + tol, lipschitz, dilatation, dilatation - lipschitz};
}

// ---------------------------------------------------------------------------

ThinProjection project_thin(const FNPoint& point, std::span<const CurveClass> gamma, CollarConstants eps) {
  require_once_punctured_torus(point.sig(), "project_thin");
  if (gamma.size() != 1 || !(gamma[0] == kMeridian)) {
    throw Error(ErrorCode::Unsupported, "on the once-punctured torus Gamma must be the pants curve 1/0");
  }
  const FNCoordinate& fn = point[0];
  if (fn.length > eps.eps1) {
    throw Error(ErrorCode::NotThin, "curve 1/0 has length " + std::to_string(fn.length) + " > eps1");
  }
  // Pinching (1,0) leaves a thrice-punctured sphere: no base coordinates.
  return {std::nullopt, {AnnulusPoint(fn.twist / fn.length, fn.length, eps.eps0)}};
}

namespace {

template <typename PerAnnulus>
MetricEstimate product_sup(const FNPoint& sigma, const FNPoint& tau, std::span<const CurveClass> gamma,
                           CollarConstants eps, PerAnnulus&& per_annulus) {
  require_same_surface(sigma, tau);
  const ThinProjection ps = project_thin(sigma, gamma, eps);
  const ThinProjection pt = project_thin(tau, gamma, eps);
  MetricEstimate out{0.0, Guarantee::AdditiveConstantEstimate, "base", {}};
  for (std::size_t i = 0; i < ps.annuli.size(); ++i) {
    const auto [value, tag] = per_annulus(ps.annuli[i], pt.annuli[i]);
    if (value > out.value) {
      out.value = value;
      out.witness = "annulus " + gamma[i].to_string() + (tag.empty() ? "" : " " + tag);
    }
  }
  return out;
}

}  // namespace

MetricEstimate dl_gamma(const FNPoint& sigma, const FNPoint& tau, std::span<const CurveClass> gamma,
                        CollarConstants eps) {
  return product_sup(sigma, tau, gamma, eps, [](const AnnulusPoint& a, const AnnulusPoint& b) {
    MetricEstimate e = dla_estimate(a, b);
    return std::make_pair(e.value, e.witness);
  });
}

MetricEstimate dt_gamma(const FNPoint& sigma, const FNPoint& tau, std::span<const CurveClass> gamma,
                        CollarConstants eps) {
  return product_sup(sigma, tau, gamma, eps, [](const AnnulusPoint& a, const AnnulusPoint& b) {
    return std::make_pair(0.5 * half_plane_distance(a, b), std::string{});
  });
}

DivergentPair divergent_pair_unchecked(double p, double q) {
  if (!(p > 0.0 && q > 0.0)) throw Error(ErrorCode::InvalidArgument, "divergent_pair needs P, q > 0");
  // Largest exponent whose rounded power of e still fits in int64.
  if (p + q > 43.6) throw Error(ErrorCode::Overflow, "e^(P+q) twists do not fit in 64 bits");
  const double length = std::exp(-p);
  const std::int64_t twists = std::llround(std::exp(p + q));
  return {FNPoint::torus(length, 0.0), FNPoint::torus(length, static_cast<double>(twists) * length), twists};
}

DivergentPair divergent_pair(double p, double q, CollarConstants eps) {
  if (!(p > 0.0 && q > 0.0)) throw Error(ErrorCode::InvalidArgument, "divergent_pair needs P, q > 0");
  if (std::exp(-p) > eps.eps1) {
    throw Error(ErrorCode::NotThin, "e^-P = " + std::to_string(std::exp(-p)) + " exceeds eps1");
  }
  return divergent_pair_unchecked(p, q);
}

double theorem1_closed_form(double p, double q) {
  return std::log1p(std::exp(q) / (2.0 * p));
}

// ---------------------------------------------------------------------------

std::string_view to_string(PairClass c) noexcept {
  switch (c) {
    case PairClass::BothThick: return "both-thick";
    case PairClass::DisjointThin: return "disjoint-thin";
    case PairClass::SharedThin: return "shared-thin";
  }
  return "unknown";
}

ComparabilityReport comparability_check(const FNPoint& sigma, const FNPoint& tau,
                                        std::span<const CurveClass> candidates, CollarConstants eps) {
  auto thin = [&](const FNPoint& p) {
    auto out = thin_curves(p, eps.eps1, candidates);
    sort_unique(out);
    return out;
  };
  ComparabilityReport r{PairClass::BothThick, thin(sigma), thin(tau), dl(sigma, tau, candidates),
                        thick_quantity(sigma, tau, ThickQuantity::SigmaMarking, candidates, eps),
                        thick_quantity(sigma, tau, ThickQuantity::TauMarking, candidates, eps),
                        std::nullopt, std::nullopt, true, std::nullopt};
  std::vector<CurveClass> shared;
  std::set_intersection(r.thin_sigma.begin(), r.thin_sigma.end(), r.thin_tau.begin(), r.thin_tau.end(),
                        std::back_inserter(shared));
  if (!shared.empty()) {
    r.kind = PairClass::SharedThin;
    r.comparable = false;
    // Product coordinates exist only for the pants curve of the FN chart.
    if (shared.size() == 1 && shared[0] == kMeridian) {
      r.dl_gamma = dl_gamma(sigma, tau, shared, eps);
      r.dt_gamma = dt_gamma(sigma, tau, shared, eps);
    }
  } else if (!r.thin_sigma.empty() || !r.thin_tau.empty()) {
    r.kind = PairClass::DisjointThin;
  } else {
    const double gap = std::max({std::fabs(r.dl.value - r.q3.value), std::fabs(r.dl.value - r.q4.value),
                                 std::fabs(r.q3.value - r.q4.value)});
    r.thick_bound_holds = gap <= kThickComparabilityBound;
  }
  return r;
}

}  // namespace lipteich
