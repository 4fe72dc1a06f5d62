#include "fgroup/distance.hpp"

#include <algorithm>
#include <stdexcept>

namespace fgroup {

namespace {

// Largest excess index_k - (k+1) - s + 1 over the 0-based entries of one
// part, clamped at zero.  Positions whose index obeys the A_s pattern
// contribute nothing.
std::uint64_t max_excess(const std::vector<std::uint32_t>& part,
                         std::uint32_t s) {
  std::int64_t best = 0;
  for (std::size_t k = 0; k < part.size(); ++k) {
    const std::int64_t excess = static_cast<std::int64_t>(part[k]) -
                                static_cast<std::int64_t>(k + 1) -
                                static_cast<std::int64_t>(s) + 1;
    if (excess > best) best = excess;
  }
  return static_cast<std::uint64_t>(best);
}

std::uint64_t count_bad(const std::vector<std::uint32_t>& part,
                        std::uint32_t s) {
  std::uint64_t bad = 0;
  for (std::size_t k = 0; k < part.size(); ++k)
    if (std::uint64_t{part[k]} >= std::uint64_t{s} + k + 1) ++bad;
  return bad;
}

std::uint64_t sum_excess(const std::vector<std::uint32_t>& part,
                         std::uint32_t s) {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < part.size(); ++k) {
    const std::uint64_t threshold = std::uint64_t{s} + k + 1;
    if (std::uint64_t{part[k]} >= threshold)
      total += std::uint64_t{part[k]} - threshold + 1;
  }
  return total;
}

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) {
  return a > b ? a - b : b - a;
}

}  // namespace

DistanceFunctionId parse_distance_fn(std::string_view name) {
  if (name == "dB") return DistanceFunctionId::kB;
  if (name == "dBw") return DistanceFunctionId::kBWeighted;
  if (name == "dA") return DistanceFunctionId::kA;
  if (name == "dAw") return DistanceFunctionId::kAWeighted;
  if (name == "dAmax") return DistanceFunctionId::kAMax;
  throw std::invalid_argument(
      "unknown distance function (expected dB, dBw, dA, dAw, or dAmax)");
}

std::string distance_fn_name(DistanceFunctionId fn) {
  switch (fn) {
    case DistanceFunctionId::kB: return "dB";
    case DistanceFunctionId::kBWeighted: return "dBw";
    case DistanceFunctionId::kA: return "dA";
    case DistanceFunctionId::kAWeighted: return "dAw";
    case DistanceFunctionId::kAMax: return "dAmax";
  }
  throw std::invalid_argument("invalid distance function id");
}

GeneratorSetId distance_fn_target(DistanceFunctionId fn) {
  switch (fn) {
    case DistanceFunctionId::kB:
    case DistanceFunctionId::kBWeighted:
      return GeneratorSetId::kB;
    default:
      return GeneratorSetId::kA;
  }
}

std::uint64_t d_b(const NormalForm& u, std::uint32_t s) {
  validate_subgroup_parameter(s);
  // Both parts are ascending, so the letters with index <= s form a
  // prefix of each.
  const auto& pos = u.positive();
  const auto& neg = u.negative();
  return static_cast<std::uint64_t>(
             std::upper_bound(pos.begin(), pos.end(), s) - pos.begin()) +
         static_cast<std::uint64_t>(
             std::upper_bound(neg.begin(), neg.end(), s) - neg.begin());
}

std::uint64_t d_b_weighted(const NormalForm& u, std::uint32_t s) {
  validate_subgroup_parameter(s);
  std::uint64_t total = 0;
  for (std::uint32_t i : u.positive()) {
    if (i > s) break;
    total += std::uint64_t{s} + 1 - i;
  }
  for (std::uint32_t j : u.negative()) {
    if (j > s) break;
    total += std::uint64_t{s} + 1 - j;
  }
  return total;
}

std::uint64_t d_a(const NormalForm& u, std::uint32_t s) {
  validate_subgroup_parameter(s);
  return count_bad(u.positive(), s) + count_bad(u.negative(), s) +
         abs_diff(u.positive().size(), u.negative().size());
}

std::uint64_t d_a_weighted(const NormalForm& u, std::uint32_t s) {
  validate_subgroup_parameter(s);
  return sum_excess(u.positive(), s) + sum_excess(u.negative(), s) +
         abs_diff(u.positive().size(), u.negative().size());
}

AMaxDecomposition a_max_decomposition(const NormalForm& u, std::uint32_t s) {
  validate_subgroup_parameter(s);
  return AMaxDecomposition{max_excess(u.positive(), s),
                           max_excess(u.negative(), s), u.positive().size(),
                           u.negative().size()};
}

std::uint64_t d_a_max(const NormalForm& u, std::uint32_t s) {
  const AMaxDecomposition d = a_max_decomposition(u, s);
  return d.m_p + d.m_n + abs_diff(d.p + d.m_p, d.n + d.m_n);
}

std::uint64_t evaluate(DistanceFunctionId fn, const NormalForm& u,
                       std::uint32_t s) {
  switch (fn) {
    case DistanceFunctionId::kB: return d_b(u, s);
    case DistanceFunctionId::kBWeighted: return d_b_weighted(u, s);
    case DistanceFunctionId::kA: return d_a(u, s);
    case DistanceFunctionId::kAWeighted: return d_a_weighted(u, s);
    case DistanceFunctionId::kAMax: return d_a_max(u, s);
  }
  throw std::invalid_argument("invalid distance function id");
}

}  // namespace fgroup
