#include "osculate/format.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "osculate/errors.hpp"

namespace osculate {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  double x = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), x);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ValidationError("not a number: '" + std::string(text) + "'");
  }
  return x;
}

}  // namespace osculate
