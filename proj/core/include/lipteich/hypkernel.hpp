#pragma once

// Hyperbolic-plane primitives: PSL(2,R) isometries, right-angled hexagon and
// pentagon relations, collars and Fermi-coordinate distances.

#include <array>
#include <variant>

namespace lipteich {

/// Margulis constant for the hyperbolic plane (Yamada).
inline constexpr double kMargulis = 0.2629;

/// |tr| must exceed 2 by this much to count as hyperbolic.
inline constexpr double kHyperbolicTol = 1e-10;

/// Above this argument cosh/sinh are evaluated through their logarithms.
inline constexpr double kLogSpaceThreshold = 600.0;

// ---------------------------------------------------------------------------
// log-space helpers

double log_cosh(double x) noexcept;
/// log(sinh x) for x > 0.
double log_sinh(double x) noexcept;
/// log(e^a + e^b); either argument may be -inf.
double log_add_exp(double a, double b) noexcept;
/// acosh(e^x) for x >= 0 without forming e^x.
double acosh_of_exp(double x) noexcept;
/// asinh(e^x) without forming e^x.
double asinh_of_exp(double x) noexcept;

// ---------------------------------------------------------------------------
// Isometries

enum class IsometryKind { Elliptic, Parabolic, Hyperbolic };

/// Element of PSL(2,R) stored as a 2x2 matrix of determinant one. The global
/// sign is not fixed; everything observable goes through |trace|.
class Isometry {
 public:
  Isometry() = default;  // identity
  /// Rescales to determinant one. Throws InvalidArgument if det <= 0.
  Isometry(double a, double b, double c, double d);

  static Isometry identity() { return {}; }
  static Isometry diagonal(double lambda);
  /// Hyperbolic translation by `length` along the imaginary axis.
  static Isometry translation(double length);

  double a() const noexcept { return m_[0]; }
  double b() const noexcept { return m_[1]; }
  double c() const noexcept { return m_[2]; }
  double d() const noexcept { return m_[3]; }

  double trace() const noexcept { return m_[0] + m_[3]; }
  double det() const noexcept { return m_[0] * m_[3] - m_[1] * m_[2]; }
  IsometryKind kind() const noexcept;

  Isometry inverse() const noexcept;
  Isometry conjugated_by(const Isometry& g) const { return g * *this * g.inverse(); }

  friend Isometry operator*(const Isometry& x, const Isometry& y);

  /// Action on the upper half-plane, z = (re, im), im > 0.
  std::array<double, 2> apply(std::array<double, 2> z) const noexcept;

 private:
  std::array<double, 4> m_{1.0, 0.0, 0.0, 1.0};
};

/// Translation length 2 acosh(|tr|/2). Throws NotHyperbolic.
double trace_length(const Isometry& m);

/// Hyperbolic distance in the upper half-plane (curvature -1).
double upper_half_plane_distance(std::array<double, 2> z1, std::array<double, 2> z2) noexcept;

// ---------------------------------------------------------------------------
// Right-angled polygons

/// Side c of the right-angled hexagon with alternate sides a, a' and the
/// side w between them opposite c:
///   cosh c + cosh a cosh a' = sinh a sinh a' cosh w.
/// Throws Degenerate when no such hexagon exists.
double hexagon_opposite(double a, double a_prime, double w);

/// Right-angled pentagon relation cosh c = sinh u sinh a. Throws Degenerate.
double pentagon_side(double u, double a);

/// Inverse of pentagon_side in u: returns u with sinh u sinh a = cosh c.
double pentagon_side_inverse(double c, double a);

/// Width d of the collar about a geodesic of length l whose boundary has
/// length eps0:  l cosh d = eps0. Throws CollarEmpty if l >= eps0.
double collar_half_width(double core_length, double eps0);

/// Distance between two points at signed distances d1, d2 from a geodesic
/// whose feet are du apart along it (left of the oriented axis is positive):
///   cosh D = cosh d1 cosh d2 cosh du - sinh d1 sinh d2.
double fermi_distance(double d1, double d2, double du);

// ---------------------------------------------------------------------------
// Arc-to-curve length comparison

/// Arc between two distinct boundary curves of half-lengths a, a' and length b.
struct TwoBoundaryArc {
  double a;
  double a_prime;
  double b;
};

/// Arc with both ends on one boundary curve of length boundary_length. `a` is
/// the pentagon edge cut from that curve, `b` the full arc length.
struct OneBoundaryArc {
  double boundary_length;
  double a;
  double b;
};

using ArcToCurveCase = std::variant<TwoBoundaryArc, OneBoundaryArc>;

struct CollarConstants {
  double eps0 = 0.2;
  double eps1 = 0.05;
};

struct ArcToCurveResult {
  double curve_length;  // length of the closed curve built from the arc
  double gap;           // |c/2 - b| or |c/2 - b/2|
  double bound;         // 2 log(1/eps0) + 4 log 2, or log(1/eps0) + 4 log 2

  bool within_bound() const noexcept { return gap <= bound; }
};

/// Length of the closed curve associated to a perpendicular arc, by the
/// hexagon relation (two boundary components) or pentagon relation (one).
/// Throws PantsCase when the surrounding component is a pair of pants.
ArcToCurveResult arc_to_curve_bound(const ArcToCurveCase& arc, CollarConstants eps,
                                    bool pants_component = false);

}  // namespace lipteich
