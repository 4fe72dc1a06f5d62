#pragma once

#include <cstdint>
#include <cstddef>

#include "fgroup/normal_form.hpp"
#include "fgroup/rng.hpp"

namespace fgroup {

// One full run of the Shpilrain-Ushakov key agreement over the commuting
// pair (A_s, B_s): Alice holds a1, b1 and publishes u1 = a1 z b1; Bob
// holds b2, a2 and publishes u2 = b2 z a2; both arrive at the same group
// element K because a's and b's commute.
struct ProtocolInstance {
  std::uint32_t s = 2;
  std::size_t length = 0;  // the common normal-form length L of the sampled words
  NormalForm a1, b1, a2, b2;
  NormalForm z, u1, u2;
  NormalForm shared_key;  // K = a1 u2 b1 = b2 u1 a2

  friend bool operator==(const ProtocolInstance&,
                         const ProtocolInstance&) = default;
};

// What an eavesdropper sees.
struct PublicView {
  std::uint32_t s = 2;
  std::size_t length = 0;
  NormalForm z, u1, u2;

  friend bool operator==(const PublicView&, const PublicView&) = default;
};

// Published parameter recommendations (any s >= 2 and even L >= 2 are
// accepted everywhere; these are just the suggested ranges).
struct RecommendedParameters {
  std::uint32_t s_min = 3;
  std::uint32_t s_max = 8;
  std::size_t length_min = 256;
  std::size_t length_max = 320;  // even values only
};

inline constexpr RecommendedParameters kRecommendedParameters{};

// Samples a1, b1, a2, b2, z (in that fixed order, so runs are
// reproducible from the stream's seed) with normal-form length exactly
// `length` each — a1, a2 from A_s, b1, b2 from B_s, z over the whole
// generating set — then fills in u1, u2 and the shared key.
// Requires s >= 2 and even length >= 2; sampling failures propagate.
ProtocolInstance generate_instance(std::uint32_t s, std::size_t length,
                                   Rng& rng);

// Builds an instance from explicitly chosen parts: computes u1, u2 and
// the shared key, and checks both parties would agree (throws
// std::invalid_argument when the two key computations differ, i.e. the
// given secrets do not commute).  Membership and lengths are the
// caller's business; `length` is recorded as given.
ProtocolInstance assemble_instance(std::uint32_t s, std::size_t length,
                                   const NormalForm& a1, const NormalForm& b1,
                                   const NormalForm& a2, const NormalForm& b2,
                                   const NormalForm& z);

// K_A = a1 u2 b1.
NormalForm alice_shared_key(const NormalForm& a1, const NormalForm& b1,
                            const NormalForm& u2);

// K_B = b2 u1 a2.
NormalForm bob_shared_key(const NormalForm& b2, const NormalForm& a2,
                          const NormalForm& u1);

// Strips the secrets.
PublicView public_view(const ProtocolInstance& inst);

}  // namespace fgroup
