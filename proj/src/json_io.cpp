#include "fgroup/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fgroup {

namespace {

[[noreturn]] void bad_schema(const std::string& what) {
  throw std::invalid_argument("instance JSON: " + what);
}

const Json& require_key(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) bad_schema(std::string("missing key \"") + key + "\"");
  return *it;
}

std::uint64_t require_unsigned(const Json& j, const char* key) {
  const Json& v = require_key(j, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    bad_schema(std::string("key \"") + key + "\" must be a non-negative integer");
  return v.get<std::uint64_t>();
}

}  // namespace

Json word_to_json(const Word& w) {
  Json arr = Json::array();
  for (const Letter& g : w) arr.push_back(Json::array({g.index, g.exponent}));
  return arr;
}

Word word_from_json(const Json& j) {
  if (!j.is_array()) bad_schema("a word must be an array of [index, exponent] pairs");
  Word w;
  w.reserve(j.size());
  for (const Json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      bad_schema("each letter must be an [index, exponent] integer pair");
    const std::int64_t index = pair[0].get<std::int64_t>();
    const std::int64_t exponent = pair[1].get<std::int64_t>();
    if (index < 0 || index > static_cast<std::int64_t>(kMaxGeneratorIndex))
      bad_schema("letter index out of range");
    if (exponent != 1 && exponent != -1)
      bad_schema("letter exponent must be 1 or -1");
    w.push_back(Letter{static_cast<std::uint32_t>(index),
                       static_cast<int>(exponent)});
  }
  return w;
}

Json nf_to_json(const NormalForm& u) { return word_to_json(u.spelling()); }

NormalForm nf_from_json(const Json& j) { return normalize(word_from_json(j)); }

Json instance_to_json(const ProtocolInstance& inst, bool include_secrets) {
  Json j;
  j["s"] = inst.s;
  j["L"] = inst.length;
  j["z"] = nf_to_json(inst.z);
  j["u1"] = nf_to_json(inst.u1);
  j["u2"] = nf_to_json(inst.u2);
  if (include_secrets) {
    Json secrets;
    secrets["a1"] = nf_to_json(inst.a1);
    secrets["b1"] = nf_to_json(inst.b1);
    secrets["a2"] = nf_to_json(inst.a2);
    secrets["b2"] = nf_to_json(inst.b2);
    secrets["K"] = nf_to_json(inst.shared_key);
    j["secrets"] = std::move(secrets);
  }
  return j;
}

LoadedInstance instance_from_json(const Json& j) {
  if (!j.is_object()) bad_schema("top level must be an object");
  const std::uint64_t s = require_unsigned(j, "s");
  if (s < 2 || 2 * s > kMaxGeneratorIndex) bad_schema("parameter s out of range");
  const std::uint64_t length = require_unsigned(j, "L");

  LoadedInstance out;
  out.view.s = static_cast<std::uint32_t>(s);
  out.view.length = static_cast<std::size_t>(length);
  out.view.z = nf_from_json(require_key(j, "z"));
  out.view.u1 = nf_from_json(require_key(j, "u1"));
  out.view.u2 = nf_from_json(require_key(j, "u2"));

  if (j.contains("secrets")) {
    const Json& secrets = j["secrets"];
    if (!secrets.is_object()) bad_schema("\"secrets\" must be an object");
    ProtocolInstance inst = assemble_instance(
        out.view.s, out.view.length, nf_from_json(require_key(secrets, "a1")),
        nf_from_json(require_key(secrets, "b1")),
        nf_from_json(require_key(secrets, "a2")),
        nf_from_json(require_key(secrets, "b2")), out.view.z);
    if (inst.u1 != out.view.u1)
      bad_schema("u1 does not equal a1 z b1 for the given secrets");
    if (inst.u2 != out.view.u2)
      bad_schema("u2 does not equal b2 z a2 for the given secrets");
    if (inst.shared_key != nf_from_json(require_key(secrets, "K")))
      bad_schema("K does not match the key the given secrets produce");
    out.full = std::move(inst);
  }
  return out;
}

Json attack_report_to_json(const InstanceAttackReport& report,
                           const DistanceChoice& choice,
                           const std::optional<NormalForm>& true_key) {
  Json j;
  j["overall_success"] = report.overall_success;
  j["first_success"] = report.first_success
                           ? Json(equation_name(*report.first_success))
                           : Json(nullptr);
  j["recovered_key"] = report.recovered_key ? nf_to_json(*report.recovered_key)
                                            : Json(nullptr);
  if (true_key)
    j["key_matches"] =
        report.recovered_key.has_value() && *report.recovered_key == *true_key;

  Json eqs = Json::array();
  for (std::size_t k = 0; k < kAllEquations.size(); ++k) {
    const EquationId eq = kAllEquations[k];
    const AttackOutcome& o = report.outcomes[k];
    const bool a_side = equation_attacked_side(eq) == GeneratorSetId::kA;
    Json e;
    e["equation"] = equation_name(eq);
    e["attacked_side"] = a_side ? "A" : "B";
    e["distance_fn"] =
        distance_fn_name(a_side ? choice.a_side : choice.b_side);
    e["success"] = o.success;
    e["iterations_used"] = o.iterations_used;
    e["final_distance"] = o.final_distance;
    e["x_tilde_gens"] = o.x_tilde_gens;
    e["x_tilde"] = nf_to_json(o.x_tilde);
    e["y_tilde"] = nf_to_json(o.y_tilde);
    e["distance_trace"] = o.distance_trace;
    eqs.push_back(std::move(e));
  }
  j["equations"] = std::move(eqs);
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failed: " + path);
  return std::move(buf).str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace fgroup
