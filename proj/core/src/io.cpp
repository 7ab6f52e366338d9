#include "lipteich/io.hpp"

#include <array>
#include <charconv>

#include "lipteich/error.hpp"

namespace lipteich {

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
  if (ec != std::errc{}) throw Error(ErrorCode::WriteError, "cannot format double");
  return std::string(buf.data(), ptr);
}

double parse_double(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::ParseError, "not a number: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace lipteich
