#pragma once

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "arithmetree/error.hpp"

namespace arithmetree {

// Degree caps for enumeration and multiplication. Products grow as
// deg(x) * deg(y), and |Y_n|, |T_n| grow exponentially.
struct Limits {
  unsigned binary_cap = 12;
  unsigned planar_cap = 9;
  // Largest degree for which prime factorizations are searched.
  unsigned factor_cap = 9;

  static Limits from_environment() {
    Limits limits;
    if (const char* raw = std::getenv("ARITHMETREE_DEGREE_CAP")) {
      std::string_view text(raw);
      unsigned value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size() || value == 0 || value > 255) {
        throw DomainError("ARITHMETREE_DEGREE_CAP must be an integer in [1, 255], got '" +
                          std::string(text) + "'");
      }
      limits.binary_cap = value;
      limits.planar_cap = value;
    }
    return limits;
  }
};

inline const Limits& default_limits() {
  static const Limits limits = Limits::from_environment();
  return limits;
}

}  // namespace arithmetree
