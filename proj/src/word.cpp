#include "fgroup/word.hpp"

#include <cctype>
#include <stdexcept>

namespace fgroup {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

Word parse_word(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  if (i == n) throw std::invalid_argument("word text is empty");

  if (text[i] == '1') {
    ++i;
    skip_ws();
    if (i != n)
      throw std::invalid_argument("identity token '1' must be the whole word");
    return {};
  }

  Word w;
  while (i < n) {
    if (text[i] != 'x')
      throw std::invalid_argument("expected generator token starting with 'x'");
    ++i;
    if (i == n || !is_digit(text[i]))
      throw std::invalid_argument("generator token is missing its index");
    const std::size_t digits_begin = i;
    while (i < n && is_digit(text[i])) ++i;
    const std::string_view digits = text.substr(digits_begin, i - digits_begin);
    if (digits.size() > 1 && digits.front() == '0')
      throw std::invalid_argument("generator index has a leading zero");
    std::uint64_t value = 0;
    for (char c : digits) {
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
      if (value > kMaxGeneratorIndex)
        throw std::invalid_argument("generator index exceeds the supported bound");
    }
    int exponent = 1;
    if (i < n && text[i] == '^') {
      if (n - i >= 3 && text[i + 1] == '-' && text[i + 2] == '1') {
        exponent = -1;
        i += 3;
      } else {
        throw std::invalid_argument("only the exponent '^-1' is recognised");
      }
    }
    w.push_back(Letter{static_cast<std::uint32_t>(value), exponent});
    skip_ws();
  }
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& g : w) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(g.index);
    if (g.exponent < 0) out += "^-1";
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(Letter{it->index, -it->exponent});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace fgroup
