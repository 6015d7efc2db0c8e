#include "orbikit/word.hpp"

#include <cctype>
#include <cstdlib>

#include "orbikit/error.hpp"

namespace orbikit {

namespace {

constexpr char kNamed[] = {'a', 'b', 'e'};

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  Word parse() {
    Word w = sequence();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  Word sequence() {
    Word out;
    while (pos_ < text_.size() && text_[pos_] != ')') out = out * item();
    return out;
  }

  Word item() {
    const char c = text_[pos_];
    Word atom;
    bool digits_are_exponent = true;
    if (c == '(') {
      ++pos_;
      atom = sequence();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("unbalanced '('");
      ++pos_;
    } else if (c == 'g' || c == 'G') {
      ++pos_;
      const int index = number();
      if (index < 1 || index > alphabet_.punctures) {
        fail("puncture letter g" + std::to_string(index) + " outside alphabet");
      }
      atom = Word::generator(alphabet_.x_rank + index - 1);
      if (c == 'G') atom = atom.inverse();
      digits_are_exponent = false;
    } else {
      const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      int g = -1;
      for (int i = 0; i < alphabet_.x_rank && i < 3; ++i) {
        if (kNamed[i] == lower) g = i;
      }
      if (g < 0) fail("unknown letter '" + std::string(1, c) + "'");
      ++pos_;
      atom = Word::generator(g);
      if (c != lower) atom = atom.inverse();
    }
    return atom.pow(exponent(digits_are_exponent));
  }

  int exponent(bool bare_digits) {
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      int sign = 1;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        sign = -1;
        ++pos_;
      }
      return sign * number();
    }
    if (bare_digits && pos_ < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      return number();
    }
    return 1;
  }

  int number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 6) fail("number too large");
    return std::atoi(std::string(text_.substr(start, pos_ - start)).c_str());
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                "word '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Alphabet::name(int generator) const {
  if (generator < x_rank && generator < 3) return std::string(1, kNamed[generator]);
  return "g" + std::to_string(generator - x_rank + 1);
}

Word Word::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = -l;
  return Word(std::move(out));
}

Word Word::pow(int k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

Word operator*(const Word& lhs, const Word& rhs) {
  std::vector<int> out = lhs.letters_;
  for (int l : rhs.letters_) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word reduce(const Word& w) { return Word() * w; }

HomologyVector abelianize(const Word& w, int rank) {
  HomologyVector v(static_cast<std::size_t>(rank), 0);
  for (int l : w.letters()) {
    const int g = std::abs(l) - 1;
    if (g >= rank) {
      throw Error(ErrorCode::RankMismatch,
                  "letter " + std::to_string(g) + " outside rank " + std::to_string(rank));
    }
    v[static_cast<std::size_t>(g)] += l > 0 ? 1 : -1;
  }
  return v;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  return Parser(text, alphabet).parse();
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const int g = std::abs(ls[i]) - 1;
    const int run = static_cast<int>(j - i);
    std::string name = alphabet.name(g);
    if (ls[i] < 0) name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    out += name;
    if (run > 1) out += (g >= alphabet.x_rank ? "^" : "") + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace orbikit
