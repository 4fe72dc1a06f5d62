#include "fgroup/normal_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace fgroup {

namespace {

using IndexVec = std::vector<std::uint32_t>;

[[noreturn]] void throw_index_overflow() {
  throw std::overflow_error(
      "normal form would need a generator index beyond the supported bound");
}

void check_letter(Letter g) {
  if (g.index > kMaxGeneratorIndex)
    throw std::invalid_argument("letter index exceeds the supported bound");
  if (g.exponent != 1 && g.exponent != -1)
    throw std::invalid_argument("letter exponent must be +1 or -1");
}

bool contains(const IndexVec& v, std::uint64_t value) {
  return std::binary_search(v.begin(), v.end(), value);
}

// Left-multiplies by x_t the element whose leading (positive-role) part is
// `a` and trailing part is `b`.  The letter commutes to the right past
// every a-entry smaller than its running index, gaining 1 per step.  The
// settled index lands in `a` unless that would put some index in both
// parts with its successor in neither; in that exceptional case the letter
// instead absorbs one b-entry and the indices above it shift down.
void insert_positive(IndexVec& a, IndexVec& b, std::uint32_t t) {
  std::uint64_t cur = t;
  std::size_t q = 0;
  while (q < a.size() && a[q] < cur) {
    ++cur;
    ++q;
  }

  const bool settled_in_a = q < a.size() && a[q] == cur;
  if (!settled_in_a && contains(b, cur) && !contains(a, cur + 1) &&
      !contains(b, cur + 1)) {
    // Pair elimination: drop the last b-occurrence of cur and pull every
    // larger index (all of them are >= cur + 2) down by one.
    const std::size_t b_at =
        static_cast<std::size_t>(std::upper_bound(b.begin(), b.end(), cur) -
                                 b.begin()) -
        1;
    for (std::size_t k = q; k < a.size(); ++k) --a[k];
    for (std::size_t k = b_at + 1; k < b.size(); ++k) --b[k];
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(b_at));
    return;
  }

  if (cur > kMaxGeneratorIndex) throw_index_overflow();
  a.insert(a.begin() + static_cast<std::ptrdiff_t>(q),
           static_cast<std::uint32_t>(cur));
}

// Left-multiplies by x_t^{-1} the element whose leading part is `a` and
// trailing part is `b`.  The letter sweeps right past smaller a-entries
// (gaining 1 per step) and cancels outright if it meets its own index.
// Otherwise it pushes the remaining a-entries and the b-entries above it
// up by one and settles in `b`.
void insert_negative(IndexVec& a, IndexVec& b, std::uint32_t t) {
  std::uint64_t cur = t;
  std::size_t q = 0;
  while (q < a.size() && a[q] < cur) {
    ++cur;
    ++q;
  }

  if (q < a.size() && a[q] == cur) {
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(q));
    return;
  }

  if (cur > kMaxGeneratorIndex) throw_index_overflow();
  if (q < a.size() && a.back() >= kMaxGeneratorIndex) throw_index_overflow();
  const std::size_t b0 = static_cast<std::size_t>(
      std::upper_bound(b.begin(), b.end(), cur) - b.begin());
  if (b0 < b.size() && b.back() >= kMaxGeneratorIndex) throw_index_overflow();

  for (std::size_t k = q; k < a.size(); ++k) ++a[k];
  for (std::size_t k = b0; k < b.size(); ++k) ++b[k];
  b.insert(b.begin() + static_cast<std::ptrdiff_t>(b0),
           static_cast<std::uint32_t>(cur));
}

}  // namespace

Word NormalForm::spelling() const {
  Word w;
  w.reserve(length());
  for (std::uint32_t i : pos_) w.push_back(Letter{i, 1});
  for (auto it = neg_.rbegin(); it != neg_.rend(); ++it)
    w.push_back(Letter{*it, -1});
  return w;
}

void NormalForm::mul_left(Letter g) {
  check_letter(g);
  if (g.exponent > 0)
    insert_positive(pos_, neg_, g.index);
  else
    insert_negative(pos_, neg_, g.index);
}

void NormalForm::mul_right(Letter g) {
  check_letter(g);
  // w * g == (g^{-1} * w^{-1})^{-1} and inversion swaps the two parts, so
  // right multiplication is left multiplication with the roles reversed.
  if (g.exponent > 0)
    insert_negative(neg_, pos_, g.index);
  else
    insert_positive(neg_, pos_, g.index);
}

void NormalForm::mul_right_word(const Word& w) {
  for (const Letter& g : w) mul_right(g);
}

void NormalForm::mul_left_word(const Word& w) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) mul_left(*it);
}

void NormalForm::mul_left_nf(const NormalForm& u) {
  if (&u == this) {
    const NormalForm copy = u;
    mul_left_nf(copy);
    return;
  }
  // u's spelled letters, appended on the left from its last letter back.
  for (std::uint32_t j : u.neg_) mul_left(Letter{j, -1});
  for (auto it = u.pos_.rbegin(); it != u.pos_.rend(); ++it)
    mul_left(Letter{*it, 1});
}

void NormalForm::mul_right_nf(const NormalForm& v) {
  if (&v == this) {
    const NormalForm copy = v;
    mul_right_nf(copy);
    return;
  }
  for (std::uint32_t i : v.pos_) mul_right(Letter{i, 1});
  for (auto it = v.neg_.rbegin(); it != v.neg_.rend(); ++it)
    mul_right(Letter{*it, -1});
}

NormalForm multiply_letter(const NormalForm& w, Letter x, Side side) {
  NormalForm out = w;
  if (side == Side::kLeft)
    out.mul_left(x);
  else
    out.mul_right(x);
  return out;
}

NormalForm normalize(const Word& w) {
  NormalForm out;
  out.mul_right_word(w);
  return out;
}

NormalForm multiply(const NormalForm& u, const NormalForm& v) {
  if (u.length() >= v.length()) {
    NormalForm out = u;
    out.mul_right_nf(v);
    return out;
  }
  NormalForm out = v;
  out.mul_left_nf(u);
  return out;
}

NormalForm inverse_nf(const NormalForm& w) {
  return NormalForm(w.neg_, w.pos_);
}

bool equals(const Word& a, const Word& b) { return normalize(a) == normalize(b); }

bool equals(const NormalForm& a, const NormalForm& b) { return a == b; }

bool equals(const Word& a, const NormalForm& b) { return normalize(a) == b; }

std::size_t nf_length(const Word& w) { return normalize(w).length(); }

std::map<std::uint32_t, GeneratorCounts> letter_counts(const NormalForm& w) {
  std::map<std::uint32_t, GeneratorCounts> counts;
  for (std::uint32_t i : w.positive()) ++counts[i].positive;
  for (std::uint32_t j : w.negative()) ++counts[j].negative;
  return counts;
}

}  // namespace fgroup
