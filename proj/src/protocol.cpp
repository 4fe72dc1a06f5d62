#include "fgroup/protocol.hpp"

#include <stdexcept>

#include "fgroup/subgroups.hpp"

namespace fgroup {

ProtocolInstance generate_instance(std::uint32_t s, std::size_t length,
                                   Rng& rng) {
  validate_subgroup_parameter(s);
  if (length < 2 || length % 2 != 0)
    throw std::invalid_argument("instance length must be even and >= 2");

  const NormalForm a1 = sample_element(GeneratorSetId::kA, s, length, rng);
  const NormalForm b1 = sample_element(GeneratorSetId::kB, s, length, rng);
  const NormalForm a2 = sample_element(GeneratorSetId::kA, s, length, rng);
  const NormalForm b2 = sample_element(GeneratorSetId::kB, s, length, rng);
  const NormalForm z = sample_element(GeneratorSetId::kW, s, length, rng);
  return assemble_instance(s, length, a1, b1, a2, b2, z);
}

ProtocolInstance assemble_instance(std::uint32_t s, std::size_t length,
                                   const NormalForm& a1, const NormalForm& b1,
                                   const NormalForm& a2, const NormalForm& b2,
                                   const NormalForm& z) {
  validate_subgroup_parameter(s);
  ProtocolInstance inst;
  inst.s = s;
  inst.length = length;
  inst.a1 = a1;
  inst.b1 = b1;
  inst.a2 = a2;
  inst.b2 = b2;
  inst.z = z;
  inst.u1 = multiply(multiply(a1, z), b1);
  inst.u2 = multiply(multiply(b2, z), a2);
  inst.shared_key = alice_shared_key(a1, b1, inst.u2);
  if (bob_shared_key(b2, a2, inst.u1) != inst.shared_key)
    throw std::invalid_argument(
        "the two key computations disagree; the given secrets do not commute");
  return inst;
}

NormalForm alice_shared_key(const NormalForm& a1, const NormalForm& b1,
                            const NormalForm& u2) {
  return multiply(multiply(a1, u2), b1);
}

NormalForm bob_shared_key(const NormalForm& b2, const NormalForm& a2,
                          const NormalForm& u1) {
  return multiply(multiply(b2, u1), a2);
}

PublicView public_view(const ProtocolInstance& inst) {
  return PublicView{inst.s, inst.length, inst.z, inst.u1, inst.u2};
}

}  // namespace fgroup
