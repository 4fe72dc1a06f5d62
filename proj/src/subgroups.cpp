#include "fgroup/subgroups.hpp"

#include <stdexcept>

namespace fgroup {

void validate_subgroup_parameter(std::uint32_t s) {
  if (s < 2) throw std::invalid_argument("subgroup parameter s must be >= 2");
  if (std::uint64_t{2} * s > kMaxGeneratorIndex)
    throw std::invalid_argument("subgroup parameter s is too large");
}

std::vector<Word> generating_set(GeneratorSetId id, std::uint32_t s) {
  validate_subgroup_parameter(s);
  std::vector<Word> gens;
  switch (id) {
    case GeneratorSetId::kA:
      gens.reserve(s);
      for (std::uint32_t j = 1; j <= s; ++j)
        gens.push_back(Word{Letter{0, 1}, Letter{j, -1}});
      break;
    case GeneratorSetId::kB:
      gens.reserve(s);
      for (std::uint32_t j = 1; j <= s; ++j)
        gens.push_back(Word{Letter{s + j, 1}});
      break;
    case GeneratorSetId::kW:
      gens.reserve(static_cast<std::size_t>(s) + 3);
      for (std::uint32_t i = 0; i <= s + 2; ++i)
        gens.push_back(Word{Letter{i, 1}});
      break;
  }
  return gens;
}

bool is_member_a(const NormalForm& u, std::uint32_t s) {
  validate_subgroup_parameter(s);
  const auto& pos = u.positive();
  const auto& neg = u.negative();
  if (pos.size() != neg.size()) return false;
  for (std::size_t k = 0; k < pos.size(); ++k) {
    // index_k - k < s with 1-based k, kept in unsigned-safe form.
    if (std::uint64_t{pos[k]} >= std::uint64_t{s} + k + 1) return false;
    if (std::uint64_t{neg[k]} >= std::uint64_t{s} + k + 1) return false;
  }
  return true;
}

bool is_member_b(const NormalForm& u, std::uint32_t s) {
  validate_subgroup_parameter(s);
  const bool pos_ok = u.positive().empty() || u.positive().front() >= s + 1;
  const bool neg_ok = u.negative().empty() || u.negative().front() >= s + 1;
  return pos_ok && neg_ok;
}

NormalForm sample_element(GeneratorSetId id, std::uint32_t s,
                          std::size_t target_length, Rng& rng) {
  validate_subgroup_parameter(s);
  if (id == GeneratorSetId::kA && target_length % 2 != 0)
    throw std::invalid_argument(
        "elements of the A subgroup have even length; pick an even target");

  const std::vector<Word> gens = generating_set(id, s);
  std::vector<Word> steps;
  steps.reserve(2 * gens.size());
  for (const Word& g : gens) steps.push_back(g);
  for (const Word& g : gens) steps.push_back(inverse(g));

  constexpr int kMaxAttempts = 10;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    NormalForm w;
    if (w.length() == target_length) return w;
    const std::size_t budget = 1000 * target_length;
    for (std::size_t used = 0; used < budget; ++used) {
      w.mul_right_word(steps[rng.below(steps.size())]);
      if (w.length() == target_length) return w;
    }
  }
  throw std::runtime_error(
      "random walk failed to reach the requested normal-form length");
}

}  // namespace fgroup
