#pragma once

#include <cstdint>
#include <cstdlib>

namespace modpress {

// Resource caps. Symbols are conceptually unbounded; every algorithm only
// ever touches finitely many, bounded by these limits.
struct Limits {
  std::int64_t max_states = 2'000'000;   // depth-k word states per matrix
  std::int64_t max_enum = 2'000'000;     // explicit periodic-word enumeration
  std::int64_t symbol_cap = 1'000'000;   // largest admissible symbol value

  // Reads MODPRESS_MAX_STATES from the environment when set.
  static Limits from_env() {
    Limits lim;
    if (const char* s = std::getenv("MODPRESS_MAX_STATES")) {
      char* end = nullptr;
      long long v = std::strtoll(s, &end, 10);
      if (end != s && v > 0) lim.max_states = v;
    }
    return lim;
  }
};

// Relative outward-rounding slop applied to floating endpoints of certified
// enclosures produced by the spectral code paths. 2^-45 by default; dimension
// dependent terms are added where matrix-vector accumulation is involved.
inline constexpr double kRelSlop = 2.8421709430404007e-14;  // 2^-45

}  // namespace modpress
