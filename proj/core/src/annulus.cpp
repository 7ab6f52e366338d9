#include "lipteich/annulus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "lipteich/error.hpp"
#include "lipteich/hypkernel.hpp"

namespace lipteich {

AnnulusPoint::AnnulusPoint(double twist, double core_length, double eps0)
    : twist_(twist), core_length_(core_length), eps0_(eps0) {
  if (!std::isfinite(twist)) throw Error(ErrorCode::InvalidArgument, "annulus twist must be finite");
  if (!(core_length > 0.0 && core_length < eps0)) {
    throw Error(ErrorCode::InvalidArgument, "annulus needs 0 < core length < eps0");
  }
  half_width_ = collar_half_width(core_length, eps0);
}

double arc_length(const AnnulusPoint& rho, std::int64_t winding) {
  const double slide = std::fabs(static_cast<double>(winding) - rho.twist()) * rho.core_length();
  return fermi_distance(rho.half_width(), -rho.half_width(), slide);
}

namespace {

void require_same_space(const AnnulusPoint& x, const AnnulusPoint& y) {
  if (x.eps0() != y.eps0()) throw Error(ErrorCode::MismatchedSpace, "annuli have different boundary lengths");
}

std::int64_t round_twist(double t) {
  if (!(std::fabs(t) < 4e18)) throw Error(ErrorCode::Overflow, "twist too large for integer windings");
  return std::llround(t);
}

struct Best {
  double value = 0.0;
  std::string witness = "core";
};

void consider_core(const AnnulusPoint& x, const AnnulusPoint& y, Best& best) {
  best.value = std::fabs(std::log(x.core_length()) - std::log(y.core_length()));
  best.witness = "core";
}

void consider_arc(const AnnulusPoint& x, const AnnulusPoint& y, std::int64_t n, Best& best) {
  const double v = std::fabs(std::log(arc_length(x, n)) - std::log(arc_length(y, n)));
  if (v > best.value) {
    best.value = v;
    best.witness = "arc n=" + std::to_string(n);
  }
}

MetricEstimate to_estimate(Best best) {
  return {best.value, Guarantee::LowerBoundByTruncation, std::move(best.witness), {}};
}

}  // namespace

MetricEstimate dla_over_windings(const AnnulusPoint& rho1, const AnnulusPoint& rho2,
                                 std::span<const std::int64_t> windings) {
  require_same_space(rho1, rho2);
  Best best;
  consider_core(rho1, rho2, best);
  for (std::int64_t n : windings) consider_arc(rho1, rho2, n, best);
  return to_estimate(std::move(best));
}

MetricEstimate dla_bruteforce(const AnnulusPoint& rho1, const AnnulusPoint& rho2, std::int64_t cutoff) {
  require_same_space(rho1, rho2);
  if (cutoff < 1) throw Error(ErrorCode::InvalidArgument, "winding cutoff must be >= 1");
  std::vector<std::pair<std::int64_t, std::int64_t>> windows;
  for (std::int64_t centre : {std::int64_t{0}, round_twist(rho1.twist()), round_twist(rho2.twist())}) {
    windows.emplace_back(centre - cutoff, centre + cutoff);
  }
  std::sort(windows.begin(), windows.end());

  Best best;
  consider_core(rho1, rho2, best);
  std::int64_t next = std::numeric_limits<std::int64_t>::min();
  for (const auto& [lo, hi] : windows) {
    for (std::int64_t n = std::max(lo, next); n <= hi; ++n) consider_arc(rho1, rho2, n, best);
    next = std::max(next, hi + 1);
  }
  return to_estimate(std::move(best));
}

AdaptiveDla dla_bruteforce_adaptive(const AnnulusPoint& rho1, const AnnulusPoint& rho2, double tol,
                                    std::int64_t max_cutoff) {
  constexpr std::int64_t kMinCutoff = 64;
  std::int64_t cutoff = 8;
  MetricEstimate current = dla_bruteforce(rho1, rho2, cutoff);
  while (cutoff < max_cutoff) {
    MetricEstimate wider = dla_bruteforce(rho1, rho2, 2 * cutoff);
    cutoff *= 2;
    const bool stable = std::fabs(wider.value - current.value) < tol;
    current = std::move(wider);
    if (stable && cutoff >= kMinCutoff) return {std::move(current), cutoff};
  }
  current.warnings.push_back("winding cutoff cap reached before stabilising");
  return {std::move(current), cutoff};
}

MetricEstimate dla_scan(const AnnulusPoint& rho1, const AnnulusPoint& rho2) {
  require_same_space(rho1, rho2);
  const std::int64_t k1 = round_twist(rho1.twist());
  const std::int64_t k2 = round_twist(rho2.twist());
  const std::int64_t lo = std::min(k1, k2);
  const std::int64_t hi = std::max(k1, k2);
  // Beyond this offset from both twists both arc lengths are affine in n.
  constexpr double kAffine = 40.0;
  const double reach = kAffine / std::min(rho1.core_length(), rho2.core_length()) + 2.0;
  if (!(reach + static_cast<double>(hi - lo) < 4e18)) throw Error(ErrorCode::Overflow, "winding range too large");
  const auto far = static_cast<std::int64_t>(reach);

  auto value = [&](std::int64_t n) {
    return std::fabs(std::log(arc_length(rho1, n)) - std::log(arc_length(rho2, n)));
  };

  Best best;
  consider_core(rho1, rho2, best);

  // Sorted sample of n: geometric offsets from each twist, both directions.
  std::vector<std::int64_t> samples;
  for (std::int64_t centre : {k1, k2}) {
    for (double off = 0.0; off <= reach;) {
      const auto o = static_cast<std::int64_t>(off);
      samples.push_back(centre - o);
      samples.push_back(centre + o);
      off = off < 16.0 ? off + 1.0 : off * 1.0442737824274138;  // 2^(1/16)
    }
    samples.push_back(centre - far);
    samples.push_back(centre + far);
  }
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());

  std::vector<double> vals(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) vals[i] = value(samples[i]);

  for (std::size_t i = 0; i < samples.size(); ++i) {
    const bool left_ok = i == 0 || vals[i] >= vals[i - 1];
    const bool right_ok = i + 1 == samples.size() || vals[i] >= vals[i + 1];
    if (!(left_ok && right_ok)) continue;
    std::int64_t a = i == 0 ? samples[i] : samples[i - 1];
    std::int64_t b = i + 1 == samples.size() ? samples[i] : samples[i + 1];
    while (b - a > 2) {
      const std::int64_t m1 = a + (b - a) / 3;
      const std::int64_t m2 = b - (b - a) / 3;
      if (value(m1) < value(m2)) a = m1; else b = m2;
    }
    for (std::int64_t n = a; n <= b; ++n) consider_arc(rho1, rho2, n, best);
  }
  return to_estimate(std::move(best));
}

MetricEstimate dla_estimate(const AnnulusPoint& rho1, const AnnulusPoint& rho2) {
  require_same_space(rho1, rho2);
  const bool swap = rho1.core_length() > rho2.core_length();
  const AnnulusPoint& shorter = swap ? rho2 : rho1;
  const AnnulusPoint& longer = swap ? rho1 : rho2;
  const double l1 = shorter.core_length();
  const double l2 = longer.core_length();
  const double dt = std::fabs(rho1.twist() - rho2.twist());
  const double log_inv_l1 = -std::log(l1);
  if (dt * l1 <= log_inv_l1) {
    return {std::log(l2) - std::log(l1), Guarantee::AdditiveConstantEstimate, "case-i", {}};
  }
  return {std::log(dt * l2 / log_inv_l1), Guarantee::AdditiveConstantEstimate, "case-ii", {}};
}

double half_plane_distance(const AnnulusPoint& rho1, const AnnulusPoint& rho2) {
  return upper_half_plane_distance({rho1.twist(), 1.0 / rho1.core_length()},
                                   {rho2.twist(), 1.0 / rho2.core_length()});
}

double half_plane_estimate(const AnnulusPoint& rho1, const AnnulusPoint& rho2) {
  const double l1 = std::min(rho1.core_length(), rho2.core_length());
  const double l2 = std::max(rho1.core_length(), rho2.core_length());
  const double dt = std::fabs(rho1.twist() - rho2.twist());
  const double base = std::log(l2) - std::log(l1);
  if (dt * l1 <= 1.0) return base;
  return base + 2.0 * std::log(dt * l1);
}

}  // namespace lipteich
