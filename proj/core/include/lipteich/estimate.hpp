#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lipteich {

enum class Guarantee {
  Exact,
  LowerBoundByTruncation,    // supremum over a finite candidate family
  AdditiveConstantEstimate,  // coarse formula, correct up to a bounded error
};

std::string_view to_string(Guarantee g) noexcept;

/// A distance value together with what kind of claim it makes and which
/// curve, arc or case produced it.
struct MetricEstimate {
  double value = 0.0;
  Guarantee guarantee = Guarantee::Exact;
  std::string witness;
  std::vector<std::string> warnings;

  /// "value,guarantee,witness"
  std::string to_csv() const;
};

}  // namespace lipteich
