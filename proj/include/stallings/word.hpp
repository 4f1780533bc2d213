#ifndef STALLINGS_WORD_HPP
#define STALLINGS_WORD_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace stallings {

// Ordered set of single-character generator names; fixes a free group of
// rank size(). Names must be distinct lowercase letters.
class Alphabet {
 public:
  explicit Alphabet(std::string_view names);

  std::size_t size() const noexcept { return names_.size(); }
  char name(std::size_t index) const { return names_.at(index); }
  const std::string& names() const noexcept { return names_; }

  // Index of generator c, or -1 when c is not in the alphabet.
  int index_of(char c) const noexcept;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string names_;
};

// A generator (sign +1) or its formal inverse (sign -1).
struct Letter {
  std::uint32_t index = 0;
  std::int32_t sign = +1;

  Letter inverse() const noexcept { return Letter{index, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word over an alphabet; the empty word is the identity.
// Reduction happens at construction, so a Word is reduced at all times.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  Word(Alphabet alphabet, std::vector<Letter> letters);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

// Surface syntax: lowercase letter = generator, uppercase = its inverse,
// optional ^<integer> exponent binds to the preceding letter or
// parenthesized group, whitespace ignored. E.g. "b^2ab^-2", "(ab)^-3".
Word parse_word(std::string_view text, const Alphabet& alphabet);

// The unique freely reduced word equal to the given letter sequence.
Word reduce(const Alphabet& alphabet, std::vector<Letter> letters);

Word invert(const Word& w);
Word concat(const Word& u, const Word& v);
Word power(const Word& w, long long exponent);

// g w g^-1, freely reduced.
Word conjugate(const Word& w, const Word& g);

// Canonical textual form with exponents collapsed, e.g. "b^2ab^-2".
// parse_word(render(w), w.alphabet()) == w.
std::string render(const Word& w);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace stallings

#endif  // STALLINGS_WORD_HPP
