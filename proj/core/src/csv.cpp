#include "starcone/csv.hpp"

#include <charconv>
#include <cmath>

namespace starcone {
namespace csv {

namespace {

std::string with_format(double v, bool fixed_digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  char buf[64];
  std::to_chars_result r =
      fixed_digits ? std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12)
                   : std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace

std::string number(double v) { return with_format(v, true); }

std::string number_exact(double v) { return with_format(v, false); }

}  // namespace csv
}  // namespace starcone
