#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fgroup/word.hpp"

namespace fgroup {

// An element of Thompson's group F in normal form
//
//   x_{i_1} ... x_{i_p} x_{j_n}^{-1} ... x_{j_1}^{-1}
//
// stored as the two non-decreasing index sequences positive() = (i_1..i_p)
// and negative() = (j_1..j_n).  Note the negative part is spelled in
// reverse storage order.  Beyond both parts being sorted, the stored pair
// always satisfies the uniqueness condition: whenever some index v occurs
// in both parts, v+1 occurs in at least one of them.
//
// Multiplication by a single generator is done by the index-shuffling
// insertion procedure; each call costs O(length) and changes the length by
// exactly +1 or -1.  All mutators either commit or throw without mutating.
class NormalForm {
 public:
  NormalForm() = default;  // identity

  const std::vector<std::uint32_t>& positive() const noexcept { return pos_; }
  const std::vector<std::uint32_t>& negative() const noexcept { return neg_; }
  std::size_t length() const noexcept { return pos_.size() + neg_.size(); }
  bool is_identity() const noexcept { return pos_.empty() && neg_.empty(); }

  // The word this element spells: positive part, then the negative part in
  // descending index order.
  Word spelling() const;

  // *this <- *this * g  /  *this <- g * *this.
  // Throws std::overflow_error if an index past kMaxGeneratorIndex would
  // have to be stored.
  void mul_right(Letter g);
  void mul_left(Letter g);

  // Fold a whole word in: mul_right_word applies w's letters left to
  // right on the right; mul_left_word applies them right to left on the
  // left.  Both compute the same thing as multiplying by normalize(w).
  void mul_right_word(const Word& w);
  void mul_left_word(const Word& w);

  // *this <- u * *this  /  *this <- *this * v, inserting the letters of
  // the given element one at a time.
  void mul_left_nf(const NormalForm& u);
  void mul_right_nf(const NormalForm& v);

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  NormalForm(std::vector<std::uint32_t> pos, std::vector<std::uint32_t> neg)
      : pos_(std::move(pos)), neg_(std::move(neg)) {}

  friend NormalForm inverse_nf(const NormalForm& w);

  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> neg_;
};

// Which side of an element a letter is multiplied on.
enum class Side { kLeft, kRight };

// Pure single-letter product: normalize(x * w) or normalize(w * x).
// The length of the result differs from w's by exactly one.
NormalForm multiply_letter(const NormalForm& w, Letter x, Side side);

// Normal form of a free word, O(|w| * output length).
NormalForm normalize(const Word& w);

// Product in the group; inserts the shorter operand's letters into a copy
// of the longer one.
NormalForm multiply(const NormalForm& u, const NormalForm& v);

// Inverse: the two index sequences swap roles.
NormalForm inverse_nf(const NormalForm& w);

// Whether two words (or elements) represent the same group element.
bool equals(const Word& a, const Word& b);
bool equals(const NormalForm& a, const NormalForm& b);
bool equals(const Word& a, const NormalForm& b);

// Number of letters in the normal form of w.
std::size_t nf_length(const Word& w);

// Occurrence counts per generator index in a normal form: .positive is
// the multiplicity in the positive part, .negative in the negative part.
// Indices absent from both parts are absent from the map.
struct GeneratorCounts {
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;

  friend bool operator==(const GeneratorCounts&, const GeneratorCounts&) = default;
};

std::map<std::uint32_t, GeneratorCounts> letter_counts(const NormalForm& w);

}  // namespace fgroup
