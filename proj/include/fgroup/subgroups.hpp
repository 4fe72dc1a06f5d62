#pragma once

#include <cstdint>
#include <vector>

#include "fgroup/normal_form.hpp"
#include "fgroup/rng.hpp"
#include "fgroup/word.hpp"

namespace fgroup {

// The three generating sets of interest for a parameter s >= 2:
//   kA generates A_s = < x0 x1^-1, ..., x0 xs^-1 >,
//   kB generates B_s = < x_{s+1}, ..., x_{2s} >,
//   kW generates the whole group via x0, ..., x_{s+2}.
// A_s and B_s commute elementwise, which is what the key agreement and
// the attack both rest on.
enum class GeneratorSetId { kA, kB, kW };

// Throws std::invalid_argument unless 2 <= s and 2s stays within the
// representable index range.
void validate_subgroup_parameter(std::uint32_t s);

// The generating words, in ascending order as listed above: s two-letter
// words for kA, s single letters for kB, s+3 single letters for kW.
std::vector<Word> generating_set(GeneratorSetId id, std::uint32_t s);

// Membership of a normal form in A_s: positive and negative parts have
// equal length p = n, and every 1-based position k in either part
// satisfies index_k - k < s.
bool is_member_a(const NormalForm& u, std::uint32_t s);

// Membership in B_s: every index in the normal form is >= s+1.
bool is_member_b(const NormalForm& u, std::uint32_t s);

// Random element of the chosen subgroup (or the whole group for kW) with
// normal-form length exactly target_length, grown by right-multiplying a
// uniformly chosen generator or inverse generator until the length is
// hit.  Single-letter steps change the length by 1 and kA steps by at
// most 2 with matching parity, so the target cannot be jumped over.
//
// target_length must be even for kA (those elements have equal-length
// parts); violations throw std::invalid_argument.  If the walk has not
// hit the target after 1000 * target_length multiplications it restarts
// from the identity; after 10 fruitless restarts throws
// std::runtime_error.
NormalForm sample_element(GeneratorSetId id, std::uint32_t s,
                          std::size_t target_length, Rng& rng);

}  // namespace fgroup
