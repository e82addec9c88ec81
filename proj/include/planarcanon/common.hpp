#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace planarcanon {

// Distance values. Infinity is a dedicated sentinel that compares greater
// than every finite distance; kInfDist is far below the int64 maximum so
// that sums of two distances never overflow.
using Dist = std::int64_t;
inline constexpr Dist kInfDist = std::numeric_limits<Dist>::max() / 4;

inline bool is_finite(Dist d) { return d < kInfDist; }

enum class ErrorCode {
  ParseError,
  VertexOutOfRange,
  Disconnected,
  InvalidRotation,
  NotTriconnected,
  NotPlanar,
  NoIntersection,
  NoStrongIntersection,
  NotTriconnectedWitness,
  CapExceeded,
  PositionBudget,
  Precondition,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

  // Optional witness payload (e.g. a separating pair).
  int witness_a = -1;
  int witness_b = -1;

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

// Portable deterministic sampling helper: rejection sampling on top of a
// 32-bit generator so outputs do not depend on the standard library's
// distribution implementations.
template <typename Rng>
std::uint32_t rng_below(Rng& rng, std::uint32_t m) {
  if (m == 0) fail(ErrorCode::Internal, "rng_below: empty range");
  const std::uint32_t limit = std::numeric_limits<std::uint32_t>::max() / m * m;
  std::uint32_t r = rng();
  while (r >= limit) r = rng();
  return r % m;
}

}  // namespace planarcanon
