#pragma once

#include <string>
#include <vector>

namespace pframe {

/// Finite digit string over {0,...,Q-1}. A word is canonical when it is empty
/// or its last digit is nonzero; trailing zeros never change the frame element
/// a word generates, so canonical words index the frame without repetition.
struct Word {
  std::vector<int> digits;

  Word() = default;
  explicit Word(std::vector<int> digits_) : digits(std::move(digits_)) {}

  std::size_t length() const { return digits.size(); }
  bool empty() const { return digits.empty(); }

  bool canonical() const { return digits.empty() || digits.back() != 0; }

  /// Copy with trailing zeros stripped. Idempotent.
  Word canonicalized() const;

  /// Digits joined by '-', or "e" for the empty word.
  std::string to_string() const;

  bool operator==(const Word& other) const = default;
};

/// Length-then-lexicographic order, the order used by enumerate_words.
bool word_less(const Word& a, const Word& b);

/// All canonical words over {0,...,alphabet-1} of length <= max_length,
/// including the empty word, in length-then-lexicographic order. The count is
/// exactly alphabet^max_length.
std::vector<Word> enumerate_words(int alphabet, int max_length);

}  // namespace pframe
