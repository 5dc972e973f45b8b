#include "pframe/word.hpp"

#include "pframe/errors.hpp"
#include "pframe/grid.hpp"

namespace pframe {

Word Word::canonicalized() const {
  Word out = *this;
  while (!out.digits.empty() && out.digits.back() == 0) out.digits.pop_back();
  return out;
}

std::string Word::to_string() const {
  if (digits.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) out += '-';
    out += std::to_string(digits[i]);
  }
  return out;
}

bool word_less(const Word& a, const Word& b) {
  if (a.digits.size() != b.digits.size())
    return a.digits.size() < b.digits.size();
  return a.digits < b.digits;
}

std::vector<Word> enumerate_words(int alphabet, int max_length) {
  if (alphabet < 2) throw Error("enumerate_words: alphabet must be >= 2");
  if (max_length < 0) throw Error("enumerate_words: negative length");
  std::vector<Word> out;
  out.reserve(ipow(alphabet, max_length));
  out.emplace_back();
  std::vector<int> digits;
  for (int n = 1; n <= max_length; ++n) {
    const std::size_t total = ipow(alphabet, n);
    for (std::size_t v = 0; v < total; ++v) {
      if (v % alphabet == 0) continue;  // word would end in 0
      digits.assign(n, 0);
      std::size_t rest = v;
      for (int j = n - 1; j >= 0; --j) {
        digits[j] = static_cast<int>(rest % alphabet);
        rest /= alphabet;
      }
      out.emplace_back(digits);
    }
  }
  return out;
}

}  // namespace pframe
