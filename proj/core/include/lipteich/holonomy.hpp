#pragma once

// Fenchel-Nielsen points, their holonomy representations and geodesic
// lengths of simple closed curves.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lipteich/hypkernel.hpp"
#include "lipteich/topology.hpp"

namespace lipteich {

/// Length and twist of one pants curve. The twist is in length units, so
/// twist -> twist + length is one full Dehn twist D along the pants curve:
/// the new point gives c the length the old one gave D^{-1}(c).
struct FNCoordinate {
  double length;
  double twist;

  friend bool operator==(const FNCoordinate&, const FNCoordinate&) = default;
};

class FNPoint {
 public:
  /// Throws InvalidFN on non-positive or non-finite lengths, or a coordinate
  /// count different from the complexity of `sig`.
  FNPoint(SurfaceSig sig, std::vector<FNCoordinate> coords);

  /// Point of the once-punctured torus with pants curve (1,0).
  static FNPoint torus(double length, double twist);

  const SurfaceSig& sig() const noexcept { return sig_; }
  std::span<const FNCoordinate> coords() const noexcept { return coords_; }
  const FNCoordinate& operator[](std::size_t i) const { return coords_.at(i); }

  /// "l=<float>,s=<float>" per pants curve, joined by ';'.
  std::string to_string() const;
  /// Parses to_string() output; the coordinate count must match `sig`.
  static FNPoint parse(std::string_view text, SurfaceSig sig = kOncePuncturedTorus);

  friend bool operator==(const FNPoint&, const FNPoint&) = default;

 private:
  SurfaceSig sig_;
  std::vector<FNCoordinate> coords_;
};

/// Images of the fundamental-group generators. On the once-punctured torus
/// X carries the pants curve (1,0) and Y the dual (0,1).
struct Representation {
  SurfaceSig sig;
  std::vector<Isometry> generators;

  /// tr[X, Y]; equals -2 for a cusped torus.
  double commutator_trace() const;
  Isometry evaluate(const Word& w) const;
};

/// Explicit gluing with tr X = 2 cosh(l/2), tr Y = 2 coth(l/2) cosh(s/2) and
/// tr XY = 2 coth(l/2) cosh((s - l)/2). Throws Unsupported off (1,1),
/// InvalidFN never (FNPoint is valid), Overflow when entries exceed doubles.
Representation build_representation(const FNPoint& point);

/// Geodesic length of a slope. Exact for (1,0); otherwise evaluated from
/// the holonomy trace in log space so tiny lengths and huge twists are safe.
double curve_length(const FNPoint& point, const CurveClass& c);

/// Translation length of an arbitrary word through explicit matrices.
double word_length(const Representation& rep, const Word& w);

/// Greedy shortest pants system, then the shortest dual for each pants curve.
/// Ties are broken by canonical slope order. Throws InsufficientCandidates.
Marking short_marking(const FNPoint& point, std::span<const CurveClass> candidates);

/// Candidates of length <= eps (eps at most the Margulis constant).
std::vector<CurveClass> thin_curves(const FNPoint& point, double eps, std::span<const CurveClass> candidates);

}  // namespace lipteich
