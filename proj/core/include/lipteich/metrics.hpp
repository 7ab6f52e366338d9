#pragma once

// Lipschitz and Teichmuller distance estimators on the once-punctured torus,
// the flat-torus testbed, thin-part product regions and the twist-divergence
// construction.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lipteich/annulus.hpp"
#include "lipteich/estimate.hpp"
#include "lipteich/holonomy.hpp"
#include "lipteich/hypkernel.hpp"
#include "lipteich/topology.hpp"

namespace lipteich {

// ---------------------------------------------------------------------------
// Sup of length ratios

/// max over candidates of l_to(c) / l_from(c). Not symmetric in (from, to).
MetricEstimate lipschitz_sup(const FNPoint& from, const FNPoint& to, std::span<const CurveClass> candidates);

/// log max(Lambda(sigma, tau), Lambda(tau, sigma)) over a shared candidate set.
MetricEstimate dl(const FNPoint& sigma, const FNPoint& tau, std::span<const CurveClass> candidates);

/// Slopes of the form D^m(c), c in enumerate_slopes(cutoff), m the nearest
/// integer to twist/length: the enumeration recentred on the point's own twist.
/// Images that overflow 64-bit slopes are skipped.
std::vector<CurveClass> local_slopes(const FNPoint& point, int cutoff);

/// Candidate family for a pair: enumerate_slopes(cutoff), both local
/// enumerations, both short markings, and their images under up to +-3
/// twists along every curve thin (<= eps1) at either point. Sorted, unique.
std::vector<CurveClass> candidate_family(const FNPoint& sigma, const FNPoint& tau, int cutoff,
                                         CollarConstants eps = {});

struct AdaptiveDl {
  MetricEstimate estimate;
  int cutoff;
};

/// dl over candidate_family, doubling the cutoff until the value moves by
/// less than tol (or max_cutoff is reached, which adds a warning).
AdaptiveDl dl_adaptive(const FNPoint& sigma, const FNPoint& tau, CollarConstants eps = {}, double tol = 1e-9,
                       int start_cutoff = 4, int max_cutoff = 64);

// ---------------------------------------------------------------------------
// Thick part

enum class ThickQuantity {
  SigmaMarking = 3,  // log max over mu_sigma of l_tau / l_sigma
  TauMarking = 4,    // log max over mu_tau of l_sigma / l_tau
};

/// Marking-based estimate of the distance. Adds a "not-thick" warning when a
/// candidate is shorter than eps1 at either point.
MetricEstimate thick_quantity(const FNPoint& sigma, const FNPoint& tau, ThickQuantity which,
                              std::span<const CurveClass> candidates, CollarConstants eps = {});

/// log i(mu1, mu2), with log 0 taken as 0.
double marking_distance(const Marking& m1, const Marking& m2, const SurfaceSig& sig = kOncePuncturedTorus);

// ---------------------------------------------------------------------------
// Flat tori

class FlatTorus {
 public:
  /// Throws InvalidArgument unless Im(modulus) > 0.
  explicit FlatTorus(std::complex<double> modulus);

  std::complex<double> modulus() const noexcept { return modulus_; }
  /// |p + q tau|^2 / Im tau
  double extremal_length(const CurveClass& c) const noexcept;
  /// |p + q tau| / sqrt(Im tau), the length in the unit-area flat metric.
  double flat_length(const CurveClass& c) const noexcept;

 private:
  std::complex<double> modulus_;
};

/// 1/2 log max Ext_2 / Ext_1 over slopes with |p|, |q| <= cutoff.
MetricEstimate flat_torus_dt(const FlatTorus& t1, const FlatTorus& t2, int cutoff);
/// log max of the two one-sided flat-length ratio sups over the same slopes.
MetricEstimate flat_torus_dl(const FlatTorus& t1, const FlatTorus& t2, int cutoff);

struct WolpertReport {
  bool holds;
  double lipschitz;   // one-sided sup of flat-length ratios
  double dilatation;  // exp(2 d_T)
  double margin;      // dilatation - lipschitz
};

WolpertReport wolpert_check(const FlatTorus& t1, const FlatTorus& t2, int cutoff, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Thin part

struct ThinProjection {
  std::optional<FNPoint> base;      // empty when the pinched surface has trivial Teichmuller space
  std::vector<AnnulusPoint> annuli;  // one per curve of Gamma
};

/// Fenchel-Nielsen projection to the product of the pinched surface and the
/// annulus spaces. On the once-punctured torus Gamma must be {(1,0)}.
/// Throws NotThin if a curve of Gamma is longer than eps1.
ThinProjection project_thin(const FNPoint& point, std::span<const CurveClass> gamma, CollarConstants eps = {});

/// sup of the base Lipschitz distance and the per-annulus closed-form estimate.
MetricEstimate dl_gamma(const FNPoint& sigma, const FNPoint& tau, std::span<const CurveClass> gamma,
                        CollarConstants eps = {});
/// sup of the base Teichmuller estimate and half the half-plane distance per annulus.
MetricEstimate dt_gamma(const FNPoint& sigma, const FNPoint& tau, std::span<const CurveClass> gamma,
                        CollarConstants eps = {});

struct DivergentPair {
  FNPoint sigma;
  FNPoint tau;
  std::int64_t twists;  // tau is sigma after this many Dehn twists along (1,0)
};

/// sigma = (e^-P, 0), tau = sigma twisted round(e^{P+q}) times.
/// Throws NotThin if e^-P > eps1, Overflow if the twist count exceeds 64 bits.
DivergentPair divergent_pair(double p, double q, CollarConstants eps = {});
/// Same construction without the thinness requirement.
DivergentPair divergent_pair_unchecked(double p, double q);

/// log((2P + e^q) / (2P)).
double theorem1_closed_form(double p, double q);

// ---------------------------------------------------------------------------

enum class PairClass { BothThick, DisjointThin, SharedThin };

std::string_view to_string(PairClass c) noexcept;

struct ComparabilityReport {
  PairClass kind;
  std::vector<CurveClass> thin_sigma;
  std::vector<CurveClass> thin_tau;
  MetricEstimate dl;
  MetricEstimate q3;
  MetricEstimate q4;
  std::optional<MetricEstimate> dl_gamma;  // present for shared thin curves
  std::optional<MetricEstimate> dt_gamma;
  bool comparable;  // false when the metrics may diverge
  /// For both-thick pairs: |dl - q3|, |dl - q4| and |q3 - q4| all within
  /// kThickComparabilityBound.
  std::optional<bool> thick_bound_holds;
};

/// Bound on |dl - q3|, |dl - q4|, |q3 - q4| and |marking_distance - q3| for
/// thick pairs of the once-punctured torus (eps0 = 0.2, eps1 = 0.05). The
/// largest value seen over twelve seeds of 100 pairs was 2.37.
inline constexpr double kThickComparabilityBound = 2.5;

ComparabilityReport comparability_check(const FNPoint& sigma, const FNPoint& tau,
                                        std::span<const CurveClass> candidates, CollarConstants eps = {});

}  // namespace lipteich
