#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "fgroup/normal_form.hpp"
#include "fgroup/subgroups.hpp"

namespace fgroup {

// The five subgroup distance functions.  All are exact non-negative
// integers on normal forms, zero exactly on members of their subgroup:
// kB and kBWeighted measure the distance to B_s, the other three to A_s.
enum class DistanceFunctionId { kB, kBWeighted, kA, kAWeighted, kAMax };

// CLI spellings: dB, dBw, dA, dAw, dAmax.
DistanceFunctionId parse_distance_fn(std::string_view name);
std::string distance_fn_name(DistanceFunctionId fn);

// The subgroup a function measures distance to.
GeneratorSetId distance_fn_target(DistanceFunctionId fn);

// Count of letters with index <= s.  Zero iff is_member_b.
std::uint64_t d_b(const NormalForm& u, std::uint32_t s);

// Same letters, each weighted by s+1-index (how far below the B range it
// sits).  Zero iff is_member_b; always >= d_b.
std::uint64_t d_b_weighted(const NormalForm& u, std::uint32_t s);

// Number of positions violating the A_s pattern: 1-based positions k in
// either part with index_k - k >= s, plus the part-length imbalance
// |p - n|.  Zero iff is_member_a.
std::uint64_t d_a(const NormalForm& u, std::uint32_t s);

// Violating positions weighted by their excess index_k - k - s + 1, plus
// |p - n|.  Zero iff is_member_a.
std::uint64_t d_a_weighted(const NormalForm& u, std::uint32_t s);

// Ingredients of the maximum-based distance to A_s: the largest excess in
// each part (zero when no position violates) and the two part lengths.
struct AMaxDecomposition {
  std::uint64_t m_p = 0;
  std::uint64_t m_n = 0;
  std::uint64_t p = 0;
  std::uint64_t n = 0;

  friend bool operator==(const AMaxDecomposition&,
                         const AMaxDecomposition&) = default;
};

AMaxDecomposition a_max_decomposition(const NormalForm& u, std::uint32_t s);

// m_p + m_n + |(p + m_p) - (n + m_n)|.  Zero iff is_member_a; unlike d_a
// and d_a_weighted it is invariant under multiplication by A_s elements.
std::uint64_t d_a_max(const NormalForm& u, std::uint32_t s);

// Dispatch by id.
std::uint64_t evaluate(DistanceFunctionId fn, const NormalForm& u,
                       std::uint32_t s);

}  // namespace fgroup
