#pragma once

#include <cmath>
#include <cstdint>

namespace qre {

/// Ceiling with a small backoff so values that are exact integers up to
/// floating-point noise (4^{3/2}, log2 of powers of two) do not round up.
inline std::int64_t snap_ceil(double x) {
  return static_cast<std::int64_t>(std::ceil(x - 1e-9));
}

}  // namespace qre
