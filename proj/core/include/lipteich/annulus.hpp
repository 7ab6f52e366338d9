#pragma once

// Regular annulus metrics in (twist, core length) coordinates: exact arc
// lengths, the brute-force sup-of-ratios distance, its closed-form estimate,
// and the hyperbolic half-plane distance it is compared against.

#include <cstdint>
#include <span>

#include "lipteich/estimate.hpp"

namespace lipteich {

/// Regular metric on an annulus whose boundary circles have length eps0.
/// `twist` is dimensionless: twist + 1 is one full turn.
class AnnulusPoint {
 public:
  /// Throws InvalidArgument unless 0 < core_length < eps0.
  AnnulusPoint(double twist, double core_length, double eps0 = 0.2);

  double twist() const noexcept { return twist_; }
  double core_length() const noexcept { return core_length_; }
  double eps0() const noexcept { return eps0_; }
  /// Distance from the core to each boundary circle.
  double half_width() const noexcept { return half_width_; }

  friend bool operator==(const AnnulusPoint&, const AnnulusPoint&) = default;

 private:
  double twist_;
  double core_length_;
  double eps0_;
  double half_width_;
};

/// Length of the boundary-to-boundary arc with winding n, whose endpoint feet
/// are |n - twist| * core_length apart along the core.
double arc_length(const AnnulusPoint& rho, std::int64_t winding);

/// sup |log(l1(beta) / l2(beta))| over the core and the given windings.
MetricEstimate dla_over_windings(const AnnulusPoint& rho1, const AnnulusPoint& rho2,
                                 std::span<const std::int64_t> windings);

/// Windings within `cutoff` of 0, round(t1) and round(t2), plus the core.
/// Non-decreasing in cutoff. Throws MismatchedSpace when eps0 differs.
MetricEstimate dla_bruteforce(const AnnulusPoint& rho1, const AnnulusPoint& rho2, std::int64_t cutoff);

struct AdaptiveDla {
  MetricEstimate estimate;
  std::int64_t cutoff;
};

/// Doubles the cutoff until the value changes by less than `tol`.
AdaptiveDla dla_bruteforce_adaptive(const AnnulusPoint& rho1, const AnnulusPoint& rho2, double tol = 1e-9,
                                    std::int64_t max_cutoff = std::int64_t{1} << 20);

/// sup over the core and every integer winding. Each arc length is a
/// function of |n - t_i| l_i that becomes affine once that product passes
/// ~40, after which the log ratio is monotone; the finite range is sampled
/// geometrically outward from both twists and every local maximum refined by
/// integer ternary search.
MetricEstimate dla_scan(const AnnulusPoint& rho1, const AnnulusPoint& rho2);

/// Two-case closed form: log(l2/l1) when |t1 - t2| l1 <= log(1/l1), else
/// log(|t1 - t2| l2 / log(1/l1)), with l1 <= l2 after swapping.
MetricEstimate dla_estimate(const AnnulusPoint& rho1, const AnnulusPoint& rho2);

/// Hyperbolic distance between (t1, 1/l1) and (t2, 1/l2) in the upper half-plane.
double half_plane_distance(const AnnulusPoint& rho1, const AnnulusPoint& rho2);

/// log(l2/l1) when |t1 - t2| l1 <= 1, else log(l2/l1) + 2 log(|t1 - t2| l1).
double half_plane_estimate(const AnnulusPoint& rho1, const AnnulusPoint& rho2);

}  // namespace lipteich
