#include "fgroup/rng.hpp"

#include <stdexcept>

namespace fgroup {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("sampling bound must be positive");
  // 2^64 mod bound, computed in 64 bits as (0 - bound) mod bound.
  const std::uint64_t cutoff = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= cutoff) return r % bound;
  }
}

std::uint64_t Rng::range(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty sampling range");
  const std::uint64_t span = hi - lo;
  if (span == 0xFFFFFFFFFFFFFFFFull) return engine_();  // full 64-bit range
  return lo + below(span + 1);
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed,
                                std::uint64_t trial_index) {
  std::uint64_t z = master_seed + (trial_index + 1) * 0x9E3779B97F4A7C15ull;
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

}  // namespace fgroup
