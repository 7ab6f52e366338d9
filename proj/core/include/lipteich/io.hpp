#pragma once

#include <string>
#include <string_view>

namespace lipteich {

/// Locale-independent, 17 significant digits ('.' decimal point).
std::string format_double(double x);

/// Whole-string parse with '.' decimal point. Throws ParseError.
double parse_double(std::string_view text);

}  // namespace lipteich
