#pragma once

// Curves, markings and Dehn twists. Intersection numbers are exact on the
// once-punctured torus, where simple closed curves are slopes p/q.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lipteich {

struct SurfaceSig {
  int genus = 1;
  int punctures = 1;

  /// xi = 3g - 3 + n, the number of pants curves.
  int complexity() const noexcept { return 3 * genus - 3 + punctures; }
  bool is_once_punctured_torus() const noexcept { return genus == 1 && punctures == 1; }
  /// Throws InvalidArgument unless complexity >= 1.
  void validate() const;

  friend bool operator==(const SurfaceSig&, const SurfaceSig&) = default;
};

inline constexpr SurfaceSig kOncePuncturedTorus{1, 1};

/// Throws Unsupported unless sig is the once-punctured torus.
void require_once_punctured_torus(const SurfaceSig& sig, std::string_view op);

/// Isotopy class of an essential simple closed curve on the once-punctured
/// torus: a coprime slope (p, q) ~ (-p, -q), stored with q > 0 or (p, q) = (1, 0).
class CurveClass {
 public:
  /// Canonicalizes; throws InvalidArgument for (0,0) or non-coprime pairs.
  CurveClass(std::int64_t p, std::int64_t q);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }

  /// "p/q"
  std::string to_string() const;
  /// Accepts "p/q" with optional signs; canonicalizes. Throws ParseError.
  static CurveClass parse(std::string_view text);

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
  /// Canonical order: by max(|p|, q), then q, then p. Used for enumeration and tie-breaks.
  friend std::strong_ordering operator<=>(const CurveClass& x, const CurveClass& y) noexcept;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

/// The curves (1,0) and (0,1).
inline const CurveClass kMeridian{1, 0};
inline const CurveClass kLongitude{0, 1};

/// All canonical coprime slopes with |p| <= n, 0 <= q <= n, in canonical order.
/// enumerate_slopes(n) is a prefix of enumerate_slopes(n + 1).
std::vector<CurveClass> enumerate_slopes(int n);

/// Signed pairing <c, a> = a.p * c.q - a.q * c.p (sign depends on representatives).
std::int64_t algebraic_pairing(const CurveClass& c, const CurveClass& along) noexcept;

/// Geometric intersection number |p1 q2 - q1 p2|.
std::int64_t intersection_number(const SurfaceSig& sig, const CurveClass& c1, const CurveClass& c2);
std::int64_t intersection_number(const CurveClass& c1, const CurveClass& c2);

/// k-th power of the Dehn twist along `along`: c -> c + k <c, along> along.
/// Throws Overflow when the image does not fit in 64 bits.
CurveClass dehn_twist(const SurfaceSig& sig, const CurveClass& c, const CurveClass& along, std::int64_t k);
CurveClass dehn_twist(const CurveClass& c, const CurveClass& along, std::int64_t k);

// ---------------------------------------------------------------------------

/// Pants curves plus one dual curve per pants curve.
struct Marking {
  std::vector<CurveClass> pants_curves;
  std::vector<CurveClass> duals;

  /// Pants curves followed by duals.
  std::vector<CurveClass> curves() const;

  /// Throws InvalidArgument if the marking is malformed on `sig`.
  void validate(const SurfaceSig& sig) const;

  /// [["p/q", ...], ["p/q", ...]]: pants curves, then duals.
  std::string to_json() const;
  static Marking from_json(std::string_view text);

  friend bool operator==(const Marking&, const Marking&) = default;
};

/// Total intersection count between the curves of two markings.
std::int64_t marking_intersection(const SurfaceSig& sig, const Marking& m1, const Marking& m2);

// ---------------------------------------------------------------------------

/// Letters of a word in the free group on X (= 1) and Y (= 2); negatives are inverses.
using Letter = int;

/// Cyclically reduced word representing a free homotopy class of curves.
class Word {
 public:
  Word() = default;
  /// Freely and cyclically reduces. Throws InvalidArgument on letters other than +-1, +-2.
  explicit Word(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t size() const noexcept { return letters_.size(); }

  Word inverse() const;
  /// Cyclic rotation by k letters (a conjugate).
  Word rotated(std::size_t k) const;
  /// Conjugate g w g^{-1}, cyclically reduced.
  Word conjugated_by(const std::vector<Letter>& g) const;

  /// Abelianization (X exponent sum, Y exponent sum).
  std::pair<std::int64_t, std::int64_t> homology() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Primitive (Christoffel) word for a slope: X for (1,0), Y for (0,1).
/// Only for modest |p|; lengths use the run-length form in holonomy.
Word slope_word(const CurveClass& c);

/// Run-length form of slope_word for q >= 1: block i is X^{k_i} Y with
/// k_i = floor(i |p| / q) - floor((i-1) |p| / q), i = 1..q, negated when p < 0.
std::vector<std::int64_t> slope_blocks(const CurveClass& c);

}  // namespace lipteich
