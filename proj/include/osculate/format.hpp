#pragma once

#include <string>
#include <string_view>

namespace osculate {

/// Shortest decimal text that parses back to exactly `x`; "nan"/"inf"/"-inf"
/// for non-finite values.
std::string format_double(double x);

/// Inverse of format_double. Throws ValidationError on malformed text.
double parse_double(std::string_view text);

}  // namespace osculate
