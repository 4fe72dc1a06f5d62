#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "fgroup/attack.hpp"
#include "fgroup/normal_form.hpp"
#include "fgroup/protocol.hpp"
#include "fgroup/word.hpp"

namespace fgroup {

// Key order is part of the on-disk format (reports must be byte-stable
// for identical inputs), hence the ordered flavour.
using Json = nlohmann::ordered_json;

// Compact word encoding: array of [index, exponent] pairs, exponent +-1.
Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

// Normal forms travel as the word they spell.
Json nf_to_json(const NormalForm& u);
NormalForm nf_from_json(const Json& j);

// Instance schema:
//   { "s": int, "L": int, "z": word, "u1": word, "u2": word,
//     "secrets": { "a1","b1","a2","b2","K": word } }   (secrets optional)
Json instance_to_json(const ProtocolInstance& inst, bool include_secrets);

// The parsed form of an instance file: always a public view, plus the
// full instance when the file carried secrets.  Loading verifies the
// schema and, when secrets are present, that u1, u2 and K are consistent
// with them (std::invalid_argument otherwise).
struct LoadedInstance {
  PublicView view;
  std::optional<ProtocolInstance> full;
};

LoadedInstance instance_from_json(const Json& j);

// Attack report: overall result, recovered key, and one record per
// equation (choices, iterations, trace).  key_matches is emitted only
// when the true key is supplied.
Json attack_report_to_json(const InstanceAttackReport& report,
                           const DistanceChoice& choice,
                           const std::optional<NormalForm>& true_key);

// Whole-file helpers; failures throw std::runtime_error naming the path.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace fgroup
