#pragma once

// Words in a free group. Generator i is encoded as letter i+1, its inverse
// as -(i+1). ASCII form: the first x_rank generators are a, b, e; the
// remaining ones (puncture loops) are g1, g2, ...; uppercase is the inverse.
// Exponents follow a letter ("a2", "A3"), or use '^' ("g1^2", "(ab)^-1").

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace orbikit {

using HomologyVector = std::vector<std::int64_t>;

struct Alphabet {
  int x_rank = 2;     // number of named letters a, b[, e]
  int punctures = 0;  // number of g-letters

  int rank() const noexcept { return x_rank + punctures; }
  std::string name(int generator) const;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

  static Word generator(int g) { return Word({g + 1}); }

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word inverse() const;
  Word pow(int k) const;
  friend Word operator*(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

// Free reduction; idempotent.
Word reduce(const Word& w);

// Exponent-sum vector of length `rank`.
HomologyVector abelianize(const Word& w, int rank);

// Throws ParseError (malformed input or letter outside the alphabet).
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

}  // namespace orbikit
