#include "lipteich/hypkernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lipteich/error.hpp"

namespace lipteich {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Arguments of acosh within this distance below 1 are treated as rounding.
constexpr double kAcoshSlack = 1e-12;

double checked_acosh(double x, const char* what) {
  if (!(x >= 1.0 - kAcoshSlack)) {
    throw Error(ErrorCode::Degenerate, std::string(what) + ": acosh argument " + std::to_string(x) + " < 1");
  }
  return x <= 1.0 ? 0.0 : std::acosh(x);
}

}  // namespace

double log_cosh(double x) noexcept {
  x = std::fabs(x);
  // log cosh x = x - log 2 + log(1 + e^{-2x})
  return x - kLn2 + std::log1p(std::exp(-2.0 * x));
}

double log_sinh(double x) noexcept {
  if (x < 1.0) return std::log(std::sinh(x));
  return x - kLn2 + std::log1p(-std::exp(-2.0 * x));
}

double log_add_exp(double a, double b) noexcept {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

double acosh_of_exp(double x) noexcept {
  if (x <= 0.0) return 0.0;
  return x + std::log1p(std::sqrt(-std::expm1(-2.0 * x)));
}

double asinh_of_exp(double x) noexcept {
  if (x < 0.0) return std::asinh(std::exp(x));
  return x + std::log1p(std::sqrt(1.0 + std::exp(-2.0 * x)));
}

// ---------------------------------------------------------------------------

Isometry::Isometry(double a, double b, double c, double d) : m_{a, b, c, d} {
  const double det = a * d - b * c;
  if (!(det > 0.0) || !std::isfinite(det)) {
    throw Error(ErrorCode::InvalidArgument, "isometry needs positive finite determinant");
  }
  const double s = 1.0 / std::sqrt(det);
  for (double& e : m_) e *= s;
}

Isometry Isometry::diagonal(double lambda) {
  return Isometry(lambda, 0.0, 0.0, 1.0 / lambda);
}

Isometry Isometry::translation(double length) {
  return diagonal(std::exp(0.5 * length));
}

IsometryKind Isometry::kind() const noexcept {
  const double t = std::fabs(trace());
  if (t > 2.0 + kHyperbolicTol) return IsometryKind::Hyperbolic;
  if (t >= 2.0 - kHyperbolicTol) return IsometryKind::Parabolic;
  return IsometryKind::Elliptic;
}

Isometry Isometry::inverse() const noexcept {
  Isometry r;
  r.m_ = {m_[3], -m_[1], -m_[2], m_[0]};
  return r;
}

Isometry operator*(const Isometry& x, const Isometry& y) {
  const auto& p = x.m_;
  const auto& q = y.m_;
  Isometry r;
  r.m_ = {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3], p[2] * q[0] + p[3] * q[2],
          p[2] * q[1] + p[3] * q[3]};
  // The exact determinant is 1. Rescale only when the computed one is
  // trustworthy; with large entries ad - bc is dominated by cancellation.
  const double ad = r.m_[0] * r.m_[3];
  const double bc = r.m_[1] * r.m_[2];
  const double det = ad - bc;
  if (det > 0.0 && std::fabs(ad) + std::fabs(bc) < 1e4 * det) {
    const double s = 1.0 / std::sqrt(det);
    for (double& e : r.m_) e *= s;
  }
  return r;
}

std::array<double, 2> Isometry::apply(std::array<double, 2> z) const noexcept {
  // (a z + b) / (c z + d) with z = x + i y
  const double x = z[0];
  const double y = z[1];
  const double nr = m_[0] * x + m_[1];
  const double ni = m_[0] * y;
  const double dr = m_[2] * x + m_[3];
  const double di = m_[2] * y;
  const double den = dr * dr + di * di;
  return {(nr * dr + ni * di) / den, (ni * dr - nr * di) / den};
}

double trace_length(const Isometry& m) {
  if (m.kind() != IsometryKind::Hyperbolic) {
    throw Error(ErrorCode::NotHyperbolic, "|trace| = " + std::to_string(std::fabs(m.trace())));
  }
  return 2.0 * std::acosh(0.5 * std::fabs(m.trace()));
}

double upper_half_plane_distance(std::array<double, 2> z1, std::array<double, 2> z2) noexcept {
  const double dx = z1[0] - z2[0];
  const double dy = z1[1] - z2[1];
  return 2.0 * std::asinh(std::hypot(dx, dy) / (2.0 * std::sqrt(z1[1] * z2[1])));
}

// ---------------------------------------------------------------------------

double hexagon_opposite(double a, double a_prime, double w) {
  if (!(a > 0.0 && a_prime > 0.0 && w > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "hexagon sides must be positive");
  }
  if (w <= kLogSpaceThreshold) {
    const double arg = std::sinh(a) * std::sinh(a_prime) * std::cosh(w) - std::cosh(a) * std::cosh(a_prime);
    return checked_acosh(arg, "hexagon_opposite");
  }
  const double log_main = std::log(std::sinh(a)) + std::log(std::sinh(a_prime)) + log_cosh(w);
  const double ratio = std::exp(log_cosh(a) + log_cosh(a_prime) - log_main);
  if (ratio >= 1.0) throw Error(ErrorCode::Degenerate, "hexagon_opposite: no hexagon");
  const double log_arg = log_main + std::log1p(-ratio);
  if (log_arg < 0.0) throw Error(ErrorCode::Degenerate, "hexagon_opposite: acosh argument < 1");
  return acosh_of_exp(log_arg);
}

double pentagon_side(double u, double a) {
  if (!(u > 0.0 && a > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "pentagon sides must be positive");
  }
  if (u <= kLogSpaceThreshold) {
    return checked_acosh(std::sinh(u) * std::sinh(a), "pentagon_side");
  }
  const double log_arg = log_sinh(u) + log_sinh(a);
  if (log_arg < 0.0) throw Error(ErrorCode::Degenerate, "pentagon_side: acosh argument < 1");
  return acosh_of_exp(log_arg);
}

double pentagon_side_inverse(double c, double a) {
  if (!(c >= 0.0 && a > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "pentagon_side_inverse: need c >= 0, a > 0");
  }
  // sinh u = cosh c / sinh a
  return asinh_of_exp(log_cosh(c) - log_sinh(a));
}

double collar_half_width(double core_length, double eps0) {
  if (!(core_length > 0.0)) throw Error(ErrorCode::InvalidArgument, "core length must be positive");
  if (core_length >= eps0) {
    throw Error(ErrorCode::CollarEmpty, "core length " + std::to_string(core_length) + " >= " + std::to_string(eps0));
  }
  return std::acosh(eps0 / core_length);
}

double fermi_distance(double d1, double d2, double du) {
  if (!(du >= 0.0)) throw Error(ErrorCode::InvalidArgument, "fermi_distance: du must be >= 0");
  // sinh^2(D/2) = sinh^2((d1-d2)/2) + cosh d1 cosh d2 sinh^2(du/2)
  const double half_offset = 0.5 * std::fabs(d1 - d2);
  const double half_slide = 0.5 * du;
  const double lhs = half_offset > 0.0 ? 2.0 * log_sinh(half_offset) : kNegInf;
  const double rhs = half_slide > 0.0 ? log_cosh(d1) + log_cosh(d2) + 2.0 * log_sinh(half_slide) : kNegInf;
  const double log_sq = log_add_exp(lhs, rhs);
  if (log_sq == kNegInf) return 0.0;
  return 2.0 * asinh_of_exp(0.5 * log_sq);
}

// ---------------------------------------------------------------------------

namespace {

void check_collar_constants(CollarConstants eps) {
  if (!(eps.eps1 > 0.0 && eps.eps1 < eps.eps0 && eps.eps0 < kMargulis)) {
    throw Error(ErrorCode::InvalidArgument, "need 0 < eps1 < eps0 < Margulis constant");
  }
  if (!(eps.eps0 / eps.eps1 > 2.0)) throw Error(ErrorCode::InvalidArgument, "need eps0/eps1 > 2");
}

ArcToCurveResult two_boundary(const TwoBoundaryArc& arc, CollarConstants eps) {
  if (!(arc.a > 0.0 && arc.a_prime > 0.0 && arc.b > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "arc_to_curve_bound: lengths must be positive");
  }
  if (2.0 * arc.a > eps.eps1 || 2.0 * arc.a_prime > eps.eps1) {
    throw Error(ErrorCode::InvalidArgument, "arc_to_curve_bound: boundary curves longer than eps1");
  }
  // Half-collar widths, with l cosh d = eps0 for the full boundary length l.
  const double d = collar_half_width(2.0 * arc.a, eps.eps0);
  const double d_prime = collar_half_width(2.0 * arc.a_prime, eps.eps0);
  const double c = hexagon_opposite(arc.a, arc.a_prime, arc.b + d + d_prime);
  return {2.0 * c, std::fabs(c - arc.b), 2.0 * std::log(1.0 / eps.eps0) + 4.0 * kLn2};
}

ArcToCurveResult one_boundary(const OneBoundaryArc& arc, CollarConstants eps) {
  if (!(arc.boundary_length > 0.0 && arc.a > 0.0 && arc.b > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "arc_to_curve_bound: lengths must be positive");
  }
  if (arc.boundary_length > eps.eps1) {
    throw Error(ErrorCode::InvalidArgument, "arc_to_curve_bound: boundary curve longer than eps1");
  }
  if (arc.a < 0.25 * arc.boundary_length || arc.a > 0.5 * arc.boundary_length) {
    throw Error(ErrorCode::InvalidArgument, "arc_to_curve_bound: pentagon edge outside [l/4, l/2]");
  }
  const double d = collar_half_width(arc.boundary_length, eps.eps0);
  const double c = pentagon_side(0.5 * arc.b + d, arc.a);
  return {2.0 * c, std::fabs(c - 0.5 * arc.b), std::log(1.0 / eps.eps0) + 4.0 * kLn2};
}

}  // namespace

ArcToCurveResult arc_to_curve_bound(const ArcToCurveCase& arc, CollarConstants eps, bool pants_component) {
  if (pants_component) {
    throw Error(ErrorCode::PantsCase, "arc lies in a pair of pants; its length is comparable to its intersection count");
  }
  check_collar_constants(eps);
  if (const auto* two = std::get_if<TwoBoundaryArc>(&arc)) return two_boundary(*two, eps);
  return one_boundary(std::get<OneBoundaryArc>(arc), eps);
}

}  // namespace lipteich
