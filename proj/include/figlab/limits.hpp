#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

#include "figlab/errors.hpp"

namespace figlab {

/// Largest dimension any single degree may reach; FIGLAB_MAX_DIM overrides.
inline std::size_t max_dim_cap() {
  static const std::size_t cap = [] {
    if (const char* s = std::getenv("FIGLAB_MAX_DIM")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(s, &end, 10);
      if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{5000};
  }();
  return cap;
}

inline void check_dim_cap(std::size_t d, int degree, const std::string& what) {
  if (d > max_dim_cap()) {
    throw DimensionCapExceeded(what + ": degree " + std::to_string(degree) + " would have dimension " +
                               std::to_string(d) + " > cap " + std::to_string(max_dim_cap()));
  }
}

}  // namespace figlab
