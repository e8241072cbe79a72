#include "commvar/sampling.hpp"

#include "commvar/errors.hpp"

namespace commvar {

long RationalSampler::integer(long lo, long hi) {
  if (hi < lo) throw ContractError("RationalSampler: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rat RationalSampler::rational(long bound) {
  if (bound < 1) throw ContractError("height bound must be >= 1");
  const long num = integer(-bound, bound);
  const long den = integer(1, bound);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat RationalSampler::nonzero_rational(long bound) {
  while (true) {
    Rat r = rational(bound);
    if (sgn(r) != 0) return r;
  }
}

}  // namespace commvar
