#include "aspec/caps.hpp"

#include <cstdlib>

namespace aspec {

namespace {

int env_max_n() {
  const char* v = std::getenv("ALPHA_SPECTRA_MAX_N");
  if (v == nullptr) return 0;
  char* end = nullptr;
  long x = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || x < 1) return 0;
  return static_cast<int>(x);
}

} // namespace

int enumeration_cap() {
  int e = env_max_n();
  return e > 0 ? e : 8;
}

int poset_cap() {
  int e = env_max_n();
  return e > 0 ? e : 6;
}

int canonical_cap() {
  int e = env_max_n();
  return e > 10 ? e : 10;
}

} // namespace aspec
