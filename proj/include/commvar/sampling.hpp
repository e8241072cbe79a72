#pragma once

#include <cstdint>
#include <random>

#include "commvar/rat.hpp"

namespace commvar {

/// Deterministic source of small rationals. The engine's output sequence is
/// fixed by the standard; the integer mapping below is ours, so draws are
/// identical on every platform.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  /// num/den with |num| <= bound and 1 <= den <= bound.
  Rat rational(long bound);
  /// Same as rational() but never zero.
  Rat nonzero_rational(long bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace commvar
