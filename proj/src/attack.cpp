#include "fgroup/attack.hpp"

#include <limits>
#include <stdexcept>

namespace fgroup {

namespace {

void validate_problem(const DecompositionProblem& p) {
  validate_subgroup_parameter(p.s);
  if (p.attacked_side == GeneratorSetId::kW)
    throw std::invalid_argument("the attacked side must be A or B");
  if (p.max_iterations < 1)
    throw std::invalid_argument("the iteration bound must be at least 1");
  if (distance_fn_target(p.distance_fn) == p.attacked_side)
    throw std::invalid_argument(
        "distance function must target the side commuting with the attacked "
        "side (A attacked -> dB family, B attacked -> dA family)");
}

// One scored move: the signed generator as a word, its inverse, and
// z^{-1} g^{-1} precomputed so a candidate complement is a single
// left-multiplication onto the maintained x_tilde^{-1} u.
struct Candidate {
  std::int32_t label = 0;
  Word g;
  Word g_inverse;
  NormalForm z_g_inverse;
};

}  // namespace

std::string equation_name(EquationId eq) {
  switch (eq) {
    case EquationId::kU1: return "U1";
    case EquationId::kU2: return "U2";
    case EquationId::kU1Inv: return "U1_INV";
    case EquationId::kU2Inv: return "U2_INV";
  }
  throw std::invalid_argument("invalid equation id");
}

EquationId parse_equation(std::string_view name) {
  if (name == "U1") return EquationId::kU1;
  if (name == "U2") return EquationId::kU2;
  if (name == "U1_INV") return EquationId::kU1Inv;
  if (name == "U2_INV") return EquationId::kU2Inv;
  throw std::invalid_argument(
      "unknown equation (expected U1, U2, U1_INV, or U2_INV)");
}

GeneratorSetId equation_attacked_side(EquationId eq) {
  switch (eq) {
    case EquationId::kU1:
    case EquationId::kU2Inv:
      return GeneratorSetId::kA;
    default:
      return GeneratorSetId::kB;
  }
}

NormalForm complement(const NormalForm& z, const NormalForm& x_tilde,
                      const NormalForm& u) {
  NormalForm y = multiply(inverse_nf(x_tilde), u);
  return multiply(inverse_nf(z), y);
}

AttackOutcome greedy_descent(const DecompositionProblem& p) {
  validate_problem(p);
  AttackOutcome out;

  const NormalForm z_inv = inverse_nf(p.z);

  // The empty product first: with x_tilde = 1 the complement is z^{-1} u.
  {
    NormalForm y0 = multiply(z_inv, p.u);
    if (evaluate(p.distance_fn, y0, p.s) == 0) {
      out.success = true;
      out.y_tilde = std::move(y0);
      return out;  // 0 iterations, empty trace
    }
  }

  const std::vector<Word> gens = generating_set(p.attacked_side, p.s);
  std::vector<Candidate> candidates;
  candidates.reserve(2 * gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Candidate c;
    c.label = static_cast<std::int32_t>(i) + 1;
    c.g = gens[i];
    c.g_inverse = inverse(gens[i]);
    c.z_g_inverse = z_inv;
    c.z_g_inverse.mul_right_word(c.g_inverse);
    candidates.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Candidate c;
    c.label = -(static_cast<std::int32_t>(i) + 1);
    c.g = inverse(gens[i]);
    c.g_inverse = gens[i];
    c.z_g_inverse = z_inv;
    c.z_g_inverse.mul_right_word(c.g_inverse);
    candidates.push_back(std::move(c));
  }

  NormalForm x_tilde;
  NormalForm h = p.u;  // x_tilde^{-1} u, maintained across moves
  NormalForm y;        // scratch complement buffer
  NormalForm moved_y;  // complement of the position most recently moved to

  for (std::size_t iter = 1; iter <= p.max_iterations; ++iter) {
    std::uint64_t best_d = std::numeric_limits<std::uint64_t>::max();
    std::size_t best_c = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      y = h;
      y.mul_left_nf(candidates[c].z_g_inverse);  // z^{-1} g^{-1} x_tilde^{-1} u
      const std::uint64_t d = evaluate(p.distance_fn, y, p.s);
      if (d == 0) {
        x_tilde.mul_right_word(candidates[c].g);
        out.x_tilde_gens.push_back(candidates[c].label);
        out.distance_trace.push_back(0);
        out.success = true;
        out.iterations_used = iter;
        out.final_distance = 0;
        out.x_tilde = std::move(x_tilde);
        out.y_tilde = std::move(y);
        return out;
      }
      if (d < best_d) {
        best_d = d;
        best_c = c;
        moved_y = y;
      }
    }
    const Candidate& chosen = candidates[best_c];
    x_tilde.mul_right_word(chosen.g);
    h.mul_left_word(chosen.g_inverse);
    out.x_tilde_gens.push_back(chosen.label);
    out.distance_trace.push_back(best_d);
    out.final_distance = best_d;
    out.iterations_used = iter;
  }

  out.success = false;
  out.x_tilde = std::move(x_tilde);
  out.y_tilde = std::move(moved_y);
  return out;
}

DecompositionProblem equation_problem(const PublicView& v, EquationId eq,
                                      DistanceFunctionId fn,
                                      std::size_t max_iterations) {
  validate_subgroup_parameter(v.s);
  DecompositionProblem p;
  p.s = v.s;
  p.attacked_side = equation_attacked_side(eq);
  p.distance_fn = fn;
  p.max_iterations = max_iterations;
  switch (eq) {
    case EquationId::kU1:
      p.z = v.z;
      p.u = v.u1;
      break;
    case EquationId::kU2:
      p.z = v.z;
      p.u = v.u2;
      break;
    case EquationId::kU1Inv:
      p.z = inverse_nf(v.z);
      p.u = inverse_nf(v.u1);
      break;
    case EquationId::kU2Inv:
      p.z = inverse_nf(v.z);
      p.u = inverse_nf(v.u2);
      break;
  }
  validate_problem(p);
  return p;
}

std::array<DecompositionProblem, 4> equations(const PublicView& v,
                                              const DistanceChoice& choice,
                                              std::size_t max_iterations) {
  if (distance_fn_target(choice.a_side) != GeneratorSetId::kB)
    throw std::invalid_argument(
        "the A-side distance function must target B (dB or dBw)");
  if (distance_fn_target(choice.b_side) != GeneratorSetId::kA)
    throw std::invalid_argument(
        "the B-side distance function must target A (dA, dAw, or dAmax)");

  std::array<DecompositionProblem, 4> out;
  for (std::size_t k = 0; k < kAllEquations.size(); ++k) {
    const EquationId eq = kAllEquations[k];
    const DistanceFunctionId fn =
        equation_attacked_side(eq) == GeneratorSetId::kA ? choice.a_side
                                                         : choice.b_side;
    out[k] = equation_problem(v, eq, fn, max_iterations);
  }
  return out;
}

NormalForm recover_shared_key(EquationId eq, const NormalForm& x_tilde,
                              const NormalForm& y_tilde, const PublicView& v) {
  switch (eq) {
    case EquationId::kU1:
      return multiply(multiply(x_tilde, v.u2), y_tilde);
    case EquationId::kU2:
      return multiply(multiply(x_tilde, v.u1), y_tilde);
    case EquationId::kU1Inv:
      return multiply(multiply(inverse_nf(y_tilde), v.u2),
                      inverse_nf(x_tilde));
    case EquationId::kU2Inv:
      return multiply(multiply(inverse_nf(y_tilde), v.u1),
                      inverse_nf(x_tilde));
  }
  throw std::invalid_argument("invalid equation id");
}

InstanceAttackReport attack_instance(const PublicView& v,
                                     const DistanceChoice& choice,
                                     std::size_t max_iterations) {
  const std::array<DecompositionProblem, 4> problems =
      equations(v, choice, max_iterations);
  InstanceAttackReport report;
  for (std::size_t k = 0; k < problems.size(); ++k) {
    report.outcomes[k] = greedy_descent(problems[k]);
    if (report.outcomes[k].success && !report.first_success) {
      report.first_success = kAllEquations[k];
      report.recovered_key =
          recover_shared_key(kAllEquations[k], report.outcomes[k].x_tilde,
                             report.outcomes[k].y_tilde, v);
    }
  }
  report.overall_success = report.first_success.has_value();
  return report;
}

}  // namespace fgroup
