#include "lipteich/topology.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <tuple>

#include <nlohmann/json.hpp>

#include "lipteich/error.hpp"

namespace lipteich {

void SurfaceSig::validate() const {
  if (genus < 0 || punctures < 0 || complexity() < 1) {
    throw Error(ErrorCode::InvalidArgument, "surface signature needs 3g - 3 + n >= 1");
  }
}

void require_once_punctured_torus(const SurfaceSig& sig, std::string_view op) {
  if (!sig.is_once_punctured_torus()) {
    throw Error(ErrorCode::Unsupported, std::string(op) + " is only implemented on the once-punctured torus");
  }
}

// ---------------------------------------------------------------------------

CurveClass::CurveClass(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (p == 0 && q == 0) throw Error(ErrorCode::InvalidArgument, "slope (0,0) is not a curve");
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorCode::InvalidArgument, "slope " + std::to_string(p) + "/" + std::to_string(q) + " is not primitive");
  }
  if (q_ < 0 || (q_ == 0 && p_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

std::string CurveClass::to_string() const {
  return std::to_string(p_) + "/" + std::to_string(q_);
}

CurveClass CurveClass::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw Error(ErrorCode::ParseError, "expected p/q, got '" + std::string(text) + "'");
  auto parse_int = [&](std::string_view part) {
    if (!part.empty() && part.front() == '+') part.remove_prefix(1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
      throw Error(ErrorCode::ParseError, "bad integer in slope '" + std::string(text) + "'");
    }
    return v;
  };
  const std::int64_t p = parse_int(text.substr(0, slash));
  const std::int64_t q = parse_int(text.substr(slash + 1));
  try {
    return CurveClass(p, q);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

namespace {

auto order_key(const CurveClass& c) noexcept {
  const std::int64_t ap = c.p() < 0 ? -c.p() : c.p();
  return std::make_tuple(std::max(ap, c.q()), c.q(), c.p());
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "slope arithmetic overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "slope arithmetic overflow");
  return r;
}

}  // namespace

std::strong_ordering operator<=>(const CurveClass& x, const CurveClass& y) noexcept {
  return order_key(x) <=> order_key(y);
}

std::vector<CurveClass> enumerate_slopes(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "enumerate_slopes needs n >= 1");
  std::vector<CurveClass> out;
  out.emplace_back(1, 0);
  for (std::int64_t q = 1; q <= n; ++q) {
    for (std::int64_t p = -n; p <= n; ++p) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t algebraic_pairing(const CurveClass& c, const CurveClass& along) noexcept {
  return along.p() * c.q() - along.q() * c.p();
}

std::int64_t intersection_number(const SurfaceSig& sig, const CurveClass& c1, const CurveClass& c2) {
  require_once_punctured_torus(sig, "intersection_number");
  const std::int64_t det = checked_add(checked_mul(c1.p(), c2.q()), -checked_mul(c1.q(), c2.p()));
  return det < 0 ? -det : det;
}

std::int64_t intersection_number(const CurveClass& c1, const CurveClass& c2) {
  return intersection_number(kOncePuncturedTorus, c1, c2);
}

CurveClass dehn_twist(const SurfaceSig& sig, const CurveClass& c, const CurveClass& along, std::int64_t k) {
  require_once_punctured_torus(sig, "dehn_twist");
  const std::int64_t pair =
      checked_add(checked_mul(along.p(), c.q()), -checked_mul(along.q(), c.p()));
  const std::int64_t coeff = checked_mul(k, pair);
  return CurveClass(checked_add(c.p(), checked_mul(coeff, along.p())),
                    checked_add(c.q(), checked_mul(coeff, along.q())));
}

CurveClass dehn_twist(const CurveClass& c, const CurveClass& along, std::int64_t k) {
  return dehn_twist(kOncePuncturedTorus, c, along, k);
}

// ---------------------------------------------------------------------------

std::vector<CurveClass> Marking::curves() const {
  std::vector<CurveClass> all = pants_curves;
  all.insert(all.end(), duals.begin(), duals.end());
  return all;
}

void Marking::validate(const SurfaceSig& sig) const {
  sig.validate();
  if (pants_curves.size() != static_cast<std::size_t>(sig.complexity()) || duals.size() != pants_curves.size()) {
    throw Error(ErrorCode::InvalidArgument, "marking needs one pants curve and one dual per complexity unit");
  }
  require_once_punctured_torus(sig, "Marking::validate");
  if (intersection_number(sig, pants_curves[0], duals[0]) != 1) {
    throw Error(ErrorCode::InvalidArgument, "dual must meet its pants curve once");
  }
}

std::string Marking::to_json() const {
  nlohmann::json pants = nlohmann::json::array();
  nlohmann::json dual = nlohmann::json::array();
  for (const auto& c : pants_curves) pants.push_back(c.to_string());
  for (const auto& c : duals) dual.push_back(c.to_string());
  return nlohmann::json::array({pants, dual}).dump();
}

Marking Marking::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_array() || doc.size() != 2 || !doc[0].is_array() || !doc[1].is_array()) {
    throw Error(ErrorCode::ParseError, "marking must be [[pants...], [duals...]]");
  }
  Marking m;
  for (int part = 0; part < 2; ++part) {
    auto& dst = part == 0 ? m.pants_curves : m.duals;
    for (const auto& item : doc[part]) {
      if (!item.is_string()) throw Error(ErrorCode::ParseError, "marking entries must be \"p/q\" strings");
      dst.push_back(CurveClass::parse(item.get<std::string>()));
    }
  }
  return m;
}

std::int64_t marking_intersection(const SurfaceSig& sig, const Marking& m1, const Marking& m2) {
  require_once_punctured_torus(sig, "marking_intersection");
  std::int64_t total = 0;
  for (const auto& a : m1.curves()) {
    for (const auto& b : m2.curves()) total = checked_add(total, intersection_number(sig, a, b));
  }
  return total;
}

// ---------------------------------------------------------------------------

Word::Word(std::vector<Letter> letters) {
  for (Letter x : letters) {
    if (x != 1 && x != -1 && x != 2 && x != -2) throw Error(ErrorCode::InvalidArgument, "word letters are +-1, +-2");
  }
  std::vector<Letter> st;
  for (Letter x : letters) {
    if (!st.empty() && st.back() == -x) {
      st.pop_back();
    } else {
      st.push_back(x);
    }
  }
  std::size_t lo = 0;
  std::size_t hi = st.size();
  while (hi - lo >= 2 && st[lo] == -st[hi - 1]) {
    ++lo;
    --hi;
  }
  letters_.assign(st.begin() + static_cast<std::ptrdiff_t>(lo), st.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word Word::inverse() const {
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (Letter& x : inv) x = -x;
  return Word(std::move(inv));
}

Word Word::rotated(std::size_t k) const {
  if (letters_.empty()) return *this;
  std::vector<Letter> r = letters_;
  std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k % r.size()), r.end());
  return Word(std::move(r));
}

Word Word::conjugated_by(const std::vector<Letter>& g) const {
  std::vector<Letter> all = g;
  all.insert(all.end(), letters_.begin(), letters_.end());
  for (auto it = g.rbegin(); it != g.rend(); ++it) all.push_back(-*it);
  return Word(std::move(all));
}

std::pair<std::int64_t, std::int64_t> Word::homology() const noexcept {
  std::int64_t hx = 0;
  std::int64_t hy = 0;
  for (Letter x : letters_) {
    if (x == 1) ++hx;
    if (x == -1) --hx;
    if (x == 2) ++hy;
    if (x == -2) --hy;
  }
  return {hx, hy};
}

std::string Word::to_string() const {
  std::string s;
  for (Letter x : letters_) {
    switch (x) {
      case 1: s += 'X'; break;
      case -1: s += 'x'; break;
      case 2: s += 'Y'; break;
      default: s += 'y'; break;
    }
  }
  return s;
}

std::vector<std::int64_t> slope_blocks(const CurveClass& c) {
  if (c.q() == 0) throw Error(ErrorCode::InvalidArgument, "slope_blocks needs q >= 1");
  const std::int64_t q = c.q();
  if (q > (std::int64_t{1} << 24)) throw Error(ErrorCode::Overflow, "slope crosses the pants curve too often");
  const std::int64_t ap = c.p() < 0 ? -c.p() : c.p();
  const std::int64_t whole = ap / q;
  const std::int64_t rest = ap % q;
  const std::int64_t sign = c.p() < 0 ? -1 : 1;
  std::vector<std::int64_t> blocks(static_cast<std::size_t>(q));
  // floor(i p / q) = i * whole + floor(i * rest / q), with rest < q keeping i * rest small.
  std::int64_t prev = 0;
  for (std::int64_t i = 1; i <= q; ++i) {
    const std::int64_t cur = (i * rest) / q;
    blocks[static_cast<std::size_t>(i - 1)] = sign * (whole + cur - prev);
    prev = cur;
  }
  return blocks;
}

Word slope_word(const CurveClass& c) {
  if (c.q() == 0) return Word({1});
  constexpr std::int64_t kMaxLetters = 1 << 20;
  const std::int64_t ap = c.p() < 0 ? -c.p() : c.p();
  if (ap > kMaxLetters) throw Error(ErrorCode::Overflow, "slope word too long to spell out");
  std::vector<Letter> letters;
  for (std::int64_t k : slope_blocks(c)) {
    const Letter x = k < 0 ? -1 : 1;
    for (std::int64_t j = 0; j < (k < 0 ? -k : k); ++j) letters.push_back(x);
    letters.push_back(2);
  }
  return Word(std::move(letters));
}

}  // namespace lipteich
