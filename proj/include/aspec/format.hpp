#pragma once

#include <charconv>
#include <string>

namespace aspec {

// Locale-independent fixed-point formatting with 12 digits after the decimal
// point; shared by the CLI and the CSV writer.
inline std::string format_fixed12(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed, 12);
  return std::string(buf, res.ptr);
}

} // namespace aspec
