#include "lipteich/estimate.hpp"

#include "lipteich/io.hpp"

namespace lipteich {

std::string_view to_string(Guarantee g) noexcept {
  switch (g) {
    case Guarantee::Exact: return "exact";
    case Guarantee::LowerBoundByTruncation: return "lower-bound-by-truncation";
    case Guarantee::AdditiveConstantEstimate: return "additive-constant-estimate";
  }
  return "unknown";
}

std::string MetricEstimate::to_csv() const {
  // Witness strings never contain commas or quotes ("p/q", "arc n=..", "case-ii").
  return format_double(value) + "," + std::string(to_string(guarantee)) + "," + witness;
}

}  // namespace lipteich
