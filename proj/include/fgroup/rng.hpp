#pragma once

#include <cstdint>
#include <random>

namespace fgroup {

// Deterministic random stream used everywhere randomness is needed.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// C++ standard, and uniform sampling over a range is done by explicit
// rejection below rather than std::uniform_int_distribution (whose
// mapping is implementation-defined).  Together these make every run
// reproducible across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Raw 64-bit draw.
  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound).  Rejection sampling: draws whose value falls
  // in the truncated top partial block (of size 2^64 mod bound) are
  // discarded, the rest reduce modulo bound without bias.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [lo, hi], both inclusive.
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi);

 private:
  std::mt19937_64 engine_;
};

// Seed for trial i of a run keyed by master_seed: master + (i+1) times the
// 64-bit golden-ratio increment, passed through the splitmix64 finalizer.
// Distinct trials get decorrelated, well-mixed seeds, and the mapping is
// pure so any trial can be replayed in isolation.
std::uint64_t derive_trial_seed(std::uint64_t master_seed,
                                std::uint64_t trial_index);

}  // namespace fgroup
