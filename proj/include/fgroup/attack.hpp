#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fgroup/distance.hpp"
#include "fgroup/normal_form.hpp"
#include "fgroup/protocol.hpp"
#include "fgroup/subgroups.hpp"

namespace fgroup {

// The four decomposition equations an eavesdropped instance yields.  In
// each, the quantity attacked is the left factor:
//   U1:     u1        = a1      z b1       (attack a1 in A_s)
//   U2:     u2        = b2      z a2       (attack b2 in B_s)
//   U1_INV: u1^{-1}   = b1^{-1} z^{-1} a1^{-1}  (attack b1^{-1} in B_s)
//   U2_INV: u2^{-1}   = a2^{-1} z^{-1} b2^{-1}  (attack a2^{-1} in A_s)
// Recovering any one of the four breaks the instance.
enum class EquationId { kU1, kU2, kU1Inv, kU2Inv };

inline constexpr std::array<EquationId, 4> kAllEquations = {
    EquationId::kU1, EquationId::kU2, EquationId::kU1Inv, EquationId::kU2Inv};

// Spellings "U1", "U2", "U1_INV", "U2_INV" (used by the CLI and reports).
std::string equation_name(EquationId eq);
EquationId parse_equation(std::string_view name);

// The subgroup the attacked left factor lives in.
GeneratorSetId equation_attacked_side(EquationId eq);

// One instance of the decomposition problem: given z and u = x z y with
// x in the attacked subgroup and y in the commuting one, search for x.
// distance_fn judges candidate complements against y's subgroup, so its
// target must be the side commuting with attacked_side.
struct DecompositionProblem {
  NormalForm z;
  NormalForm u;
  std::uint32_t s = 2;
  GeneratorSetId attacked_side = GeneratorSetId::kA;
  DistanceFunctionId distance_fn = DistanceFunctionId::kB;
  std::size_t max_iterations = 1;  // the iteration bound N
};

// Result of one greedy search.  x_tilde_gens records the walk: entry +j
// is the j-th generator (1-based) of the attacked side's generating set,
// -j its inverse; x_tilde is their product.  y_tilde is always the
// complement of x_tilde, so x_tilde * z * y_tilde = u holds whether or
// not the search succeeded.  distance_trace holds each completed
// iteration's minimum candidate distance (a trailing 0 on success).
struct AttackOutcome {
  bool success = false;
  std::vector<std::int32_t> x_tilde_gens;
  NormalForm x_tilde;
  NormalForm y_tilde;
  std::size_t iterations_used = 0;
  std::uint64_t final_distance = 0;
  std::vector<std::uint64_t> distance_trace;
};

// y = z^{-1} x_tilde^{-1} u, the unique completion of x_tilde to a
// factorization u = x_tilde z y.
NormalForm complement(const NormalForm& z, const NormalForm& x_tilde,
                      const NormalForm& u);

// The greedy distance descent: start from the empty product (accepting
// immediately if its complement already has distance 0), then per
// iteration score every one-generator extension x_tilde * g by the
// distance of its complement, halting on the first zero and otherwise
// moving to the first minimum in the fixed candidate order (positive
// generators ascending, then inverses ascending).  Runs at most
// max_iterations iterations; never backtracks; deterministic.
AttackOutcome greedy_descent(const DecompositionProblem& p);

// Which distance function each attacked side uses.  a_side must be a
// B_s-targeting function (it scores complements of A_s candidates) and
// b_side an A_s-targeting one.  The defaults are the strongest pairing.
struct DistanceChoice {
  DistanceFunctionId a_side = DistanceFunctionId::kB;
  DistanceFunctionId b_side = DistanceFunctionId::kAMax;

  friend bool operator==(const DistanceChoice&, const DistanceChoice&) =
      default;
};

// The problem one equation poses for an eavesdropped view, scored by fn
// (which must pair with the equation's attacked side).
DecompositionProblem equation_problem(const PublicView& v, EquationId eq,
                                      DistanceFunctionId fn,
                                      std::size_t max_iterations);

// The four problems for an eavesdropped view, indexed by EquationId.
std::array<DecompositionProblem, 4> equations(const PublicView& v,
                                              const DistanceChoice& choice,
                                              std::size_t max_iterations);

// Maps a solved equation back to the shared key: U1 -> x u2 y,
// U2 -> x u1 y, U1_INV -> y^{-1} u2 x^{-1}, U2_INV -> y^{-1} u1 x^{-1}.
NormalForm recover_shared_key(EquationId eq, const NormalForm& x_tilde,
                              const NormalForm& y_tilde, const PublicView& v);

// All four searches plus key recovery from the first success (in
// EquationId order).  Every equation is attempted regardless of earlier
// successes, so per-equation statistics stay comparable.
struct InstanceAttackReport {
  std::array<AttackOutcome, 4> outcomes;  // indexed like kAllEquations
  bool overall_success = false;
  std::optional<EquationId> first_success;
  std::optional<NormalForm> recovered_key;
};

InstanceAttackReport attack_instance(const PublicView& v,
                                     const DistanceChoice& choice,
                                     std::size_t max_iterations);

}  // namespace fgroup
