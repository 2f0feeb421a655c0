#ifndef AGKIT_LIMITS_HPP
#define AGKIT_LIMITS_HPP

#include <cstddef>
#include <cstdlib>
#include <string>

#include "error.hpp"

namespace agkit {

/// Size guards. Every exhaustive procedure checks its guard before starting and
/// throws CapExceeded instead of running away.
struct Limits {
  std::size_t product_elements = 4096;    // operation tables are quadratic in this
  std::size_t subset_scan_size = 16;       // close all subsets up to this universe size
  std::size_t congruence_universe = 64;
  std::size_t assignments = 10'000'000;
  std::size_t discriminator_universe = 8;
  std::size_t free_elements = 4096;
  std::size_t threads = 0;                 // 0: hardware concurrency

  /// Defaults, with AGKIT_CAP (if set) replacing the element-count guards.
  static Limits from_env() {
    Limits limits;
    if (const char* raw = std::getenv("AGKIT_CAP"); raw != nullptr && *raw != '\0') {
      char* end = nullptr;
      unsigned long long cap = std::strtoull(raw, &end, 10);
      if (end == raw || *end != '\0' || cap == 0) {
        throw Error(ErrorKind::InvalidArgument, std::string("AGKIT_CAP is not a positive integer: ") + raw);
      }
      limits.product_elements = static_cast<std::size_t>(cap);
      limits.free_elements = static_cast<std::size_t>(cap);
    }
    return limits;
  }
};

inline void check_cap(std::size_t value, std::size_t cap, const char* what) {
  if (value > cap) {
    throw Error(ErrorKind::CapExceeded,
                std::string(what) + ": " + std::to_string(value) + " exceeds guard " + std::to_string(cap));
  }
}

}  // namespace agkit

#endif
