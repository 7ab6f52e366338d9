#include "lipteich/holonomy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "lipteich/error.hpp"
#include "lipteich/io.hpp"

namespace lipteich {

FNPoint::FNPoint(SurfaceSig sig, std::vector<FNCoordinate> coords) : sig_(sig), coords_(std::move(coords)) {
  try {
    sig_.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidFN, e.what());
  }
  if (coords_.size() != static_cast<std::size_t>(sig_.complexity())) {
    throw Error(ErrorCode::InvalidFN, "expected " + std::to_string(sig_.complexity()) + " coordinates");
  }
  for (const auto& c : coords_) {
    if (!(c.length > 0.0) || !std::isfinite(c.length) || !std::isfinite(c.twist)) {
      throw Error(ErrorCode::InvalidFN, "lengths must be positive and finite, twists finite");
    }
  }
}

FNPoint FNPoint::torus(double length, double twist) {
  return FNPoint(kOncePuncturedTorus, {{length, twist}});
}

std::string FNPoint::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ';';
    out += "l=" + format_double(coords_[i].length) + ",s=" + format_double(coords_[i].twist);
  }
  return out;
}

FNPoint FNPoint::parse(std::string_view text, SurfaceSig sig) {
  std::vector<FNCoordinate> coords;
  while (!text.empty()) {
    const auto semi = text.find(';');
    std::string_view item = text.substr(0, semi);
    text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
    const auto comma = item.find(',');
    if (comma == std::string_view::npos || item.substr(0, 2) != "l=" || item.substr(comma + 1, 2) != "s=") {
      throw Error(ErrorCode::ParseError, "expected l=<float>,s=<float>, got '" + std::string(item) + "'");
    }
    coords.push_back({parse_double(item.substr(2, comma - 2)), parse_double(item.substr(comma + 3))});
  }
  return FNPoint(sig, std::move(coords));
}

// ---------------------------------------------------------------------------

double Representation::commutator_trace() const {
  if (generators.size() != 2) throw Error(ErrorCode::Unsupported, "commutator_trace needs two generators");
  const Isometry& x = generators[0];
  const Isometry& y = generators[1];
  return (x * y * x.inverse() * y.inverse()).trace();
}

Isometry Representation::evaluate(const Word& w) const {
  Isometry acc;
  for (Letter letter : w.letters()) {
    const std::size_t idx = static_cast<std::size_t>(std::abs(letter) - 1);
    if (idx >= generators.size()) throw Error(ErrorCode::InvalidArgument, "word uses a missing generator");
    acc = acc * (letter > 0 ? generators[idx] : generators[idx].inverse());
  }
  return acc;
}

Representation build_representation(const FNPoint& point) {
  require_once_punctured_torus(point.sig(), "build_representation");
  const double half = 0.5 * point[0].length;
  const double sigma = 0.5 * point[0].twist;
  const double log_coth = -std::log(std::tanh(half));
  const double log_csch = -log_sinh(half);
  if (std::fabs(sigma) + log_coth > 700.0 || half > 700.0) {
    throw Error(ErrorCode::Overflow, "holonomy entries exceed double range; use curve_length");
  }
  const double coth = std::exp(log_coth);
  const double csch = std::exp(log_csch);
  Representation rep{point.sig(), {}};
  rep.generators.push_back(Isometry::translation(point[0].length));
  rep.generators.push_back(Isometry(coth * std::exp(-sigma), csch, csch, coth * std::exp(sigma)));
  return rep;
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// 2x2 matrix with positive entries, stored as entrywise logarithms.
using LogMatrix = std::array<double, 4>;

LogMatrix log_multiply(const LogMatrix& p, const LogMatrix& q) {
  return {log_add_exp(p[0] + q[0], p[1] + q[2]), log_add_exp(p[0] + q[1], p[1] + q[3]),
          log_add_exp(p[2] + q[0], p[3] + q[2]), log_add_exp(p[2] + q[1], p[3] + q[3])};
}

}  // namespace

double curve_length(const FNPoint& point, const CurveClass& c) {
  require_once_punctured_torus(point.sig(), "curve_length");
  const double length = point[0].length;
  if (c == kMeridian) return length;

  // Holonomy words X^{k_1} Y ... X^{k_q} Y with X = diag(e^h, e^-h) and
  //   Y = [[coth h e^{-sigma}, csch h], [csch h, coth h e^{sigma}]],
  // h = l/2, sigma = s/2. Every factor has positive entries, so the trace is
  // a sum of positive terms and loses no precision to cancellation.
  const double half = 0.5 * length;
  const double sigma = 0.5 * point[0].twist;
  const double log_coth = -std::log(std::tanh(half));
  const double log_csch = -log_sinh(half);

  LogMatrix acc{0.0, kNegInf, kNegInf, 0.0};
  for (std::int64_t k : slope_blocks(c)) {
    const double shift = static_cast<double>(k) * half;
    const LogMatrix block{shift + log_coth - sigma, shift + log_csch, -shift + log_csch, -shift + log_coth + sigma};
    acc = log_multiply(acc, block);
  }
  const double log_half_trace = log_add_exp(acc[0], acc[3]) - std::numbers::ln2;
  if (!(log_half_trace > std::log1p(0.5 * kHyperbolicTol))) {
    throw Error(ErrorCode::NotHyperbolic, "slope " + c.to_string() + " has parabolic or elliptic holonomy");
  }
  return 2.0 * acosh_of_exp(log_half_trace);
}

double word_length(const Representation& rep, const Word& w) {
  return trace_length(rep.evaluate(w));
}

// ---------------------------------------------------------------------------

namespace {

struct Ranked {
  double length;
  CurveClass curve;
};

std::vector<Ranked> rank_by_length(const FNPoint& point, std::span<const CurveClass> candidates) {
  std::vector<Ranked> ranked;
  ranked.reserve(candidates.size());
  for (const auto& c : candidates) ranked.push_back({curve_length(point, c), c});
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& x, const Ranked& y) {
    if (x.length != y.length) return x.length < y.length;
    return x.curve < y.curve;
  });
  ranked.erase(std::unique(ranked.begin(), ranked.end(),
                           [](const Ranked& x, const Ranked& y) { return x.curve == y.curve; }),
               ranked.end());
  return ranked;
}

}  // namespace

Marking short_marking(const FNPoint& point, std::span<const CurveClass> candidates) {
  require_once_punctured_torus(point.sig(), "short_marking");
  const auto ranked = rank_by_length(point, candidates);
  const auto needed = static_cast<std::size_t>(point.sig().complexity());

  Marking m;
  for (const auto& r : ranked) {
    if (m.pants_curves.size() == needed) break;
    const bool disjoint = std::all_of(m.pants_curves.begin(), m.pants_curves.end(), [&](const CurveClass& p) {
      return intersection_number(point.sig(), p, r.curve) == 0 && !(p == r.curve);
    });
    if (disjoint) m.pants_curves.push_back(r.curve);
  }
  if (m.pants_curves.size() != needed) {
    throw Error(ErrorCode::InsufficientCandidates, "cannot complete a pants system from the candidates");
  }

  for (const auto& alpha : m.pants_curves) {
    // Minimal positive intersection with alpha among admissible candidates.
    std::int64_t best_i = std::numeric_limits<std::int64_t>::max();
    for (const auto& r : ranked) {
      const auto i = intersection_number(point.sig(), alpha, r.curve);
      if (i > 0) best_i = std::min(best_i, i);
    }
    const auto it = std::find_if(ranked.begin(), ranked.end(), [&](const Ranked& r) {
      if (intersection_number(point.sig(), alpha, r.curve) != best_i) return false;
      return std::all_of(m.pants_curves.begin(), m.pants_curves.end(), [&](const CurveClass& other) {
        return other == alpha || intersection_number(point.sig(), other, r.curve) == 0;
      });
    });
    if (it == ranked.end()) {
      throw Error(ErrorCode::InsufficientCandidates, "no dual for pants curve " + alpha.to_string());
    }
    m.duals.push_back(it->curve);
  }
  return m;
}

std::vector<CurveClass> thin_curves(const FNPoint& point, double eps, std::span<const CurveClass> candidates) {
  if (!(eps > 0.0 && eps <= kMargulis)) {
    throw Error(ErrorCode::InvalidArgument, "thin threshold must lie in (0, Margulis constant]");
  }
  std::vector<CurveClass> out;
  for (const auto& c : candidates) {
    if (std::find(out.begin(), out.end(), c) == out.end() && curve_length(point, c) <= eps) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lipteich
