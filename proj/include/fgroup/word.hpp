#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fgroup {

// Largest generator index the engine will store.  Indices are kept in
// uint32_t; the top value is reserved so that "index + 1" during rewriting
// can be checked without wrapping.
inline constexpr std::uint32_t kMaxGeneratorIndex = 0xFFFFFFFEu;

// One letter of a word over the infinite generating set {x0, x1, ...}:
// x_index ^ exponent with exponent in {+1, -1}.
struct Letter {
  std::uint32_t index = 0;
  int exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// A free word: a finite sequence of letters, spelled left to right.
// The empty vector is the identity.
using Word = std::vector<Letter>;

// Parses the textual form: either the lone identity token "1" or a
// sequence of tokens "x<INDEX>" / "x<INDEX>^-1", optionally separated by
// whitespace.  INDEX is a decimal integer without leading zeros, at most
// kMaxGeneratorIndex.  Throws std::invalid_argument on malformed input.
Word parse_word(std::string_view text);

// Renders a word in the same textual form parse_word accepts; the
// identity renders as "1".
std::string format_word(const Word& w);

// Free-group inverse: letters reversed, exponents flipped.
Word inverse(const Word& w);

// Concatenation (no cancellation).
Word concat(const Word& a, const Word& b);

}  // namespace fgroup
