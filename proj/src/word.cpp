#include "stallings/word.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <utility>

#include "stallings/errors.hpp"
#include "stallings/limits.hpp"

namespace stallings {

namespace {

// Push a letter onto an already-reduced sequence, cancelling on contact.
void push_reduced(std::vector<Letter>& acc, Letter l) {
  if (!acc.empty() && acc.back() == l.inverse()) {
    acc.pop_back();
  } else {
    acc.push_back(l);
  }
}

void append_reduced(std::vector<Letter>& acc, const std::vector<Letter>& tail) {
  for (Letter l : tail) push_reduced(acc, l);
}

void check_letters(const Alphabet& alphabet, const std::vector<Letter>& letters) {
  for (Letter l : letters) {
    if (l.index >= alphabet.size()) {
      throw std::invalid_argument("letter index " + std::to_string(l.index) +
                                  " out of range for alphabet \"" + alphabet.names() + "\"");
    }
    if (l.sign != +1 && l.sign != -1) {
      throw std::invalid_argument("letter sign must be +1 or -1");
    }
  }
}

}  // namespace

Alphabet::Alphabet(std::string_view names) : names_(names) {
  if (names_.empty()) throw std::invalid_argument("alphabet must have at least one generator");
  for (char c : names_) {
    if (!std::islower(static_cast<unsigned char>(c))) {
      throw std::invalid_argument(std::string("alphabet names must be lowercase letters, got '") + c + "'");
    }
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_.find(names_[i], i + 1) != std::string::npos) {
      throw std::invalid_argument(std::string("duplicate generator name '") + names_[i] + "'");
    }
  }
}

int Alphabet::index_of(char c) const noexcept {
  auto pos = names_.find(c);
  return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters) : alphabet_(std::move(alphabet)) {
  check_letters(alphabet_, letters);
  letters_.reserve(letters.size());
  for (Letter l : letters) push_reduced(letters_, l);
}

Word reduce(const Alphabet& alphabet, std::vector<Letter> letters) {
  return Word(alphabet, std::move(letters));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(w.alphabet(), std::move(out));
}

Word concat(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet()) {
    throw std::invalid_argument("concat: alphabet mismatch (\"" + u.alphabet().names() +
                                "\" vs \"" + v.alphabet().names() + "\")");
  }
  std::vector<Letter> acc = u.letters();
  append_reduced(acc, v.letters());
  return Word(u.alphabet(), std::move(acc));
}

Word power(const Word& w, long long exponent) {
  const std::size_t cap = limits::max_word_length();
  const unsigned long long mag =
      exponent < 0 ? -static_cast<unsigned long long>(exponent) : static_cast<unsigned long long>(exponent);
  if (w.length() > 0 && mag > cap / w.length()) {
    throw limit_error("power: result would exceed the word-length cap of " + std::to_string(cap));
  }
  if (mag == 0 || w.is_identity()) return Word(w.alphabet());
  const Word base = exponent < 0 ? invert(w) : w;
  std::vector<Letter> acc;
  acc.reserve(static_cast<std::size_t>(mag) * base.length());
  for (unsigned long long i = 0; i < mag; ++i) {
    append_reduced(acc, base.letters());
  }
  return Word(w.alphabet(), std::move(acc));
}

Word conjugate(const Word& w, const Word& g) {
  return concat(concat(g, w), invert(g));
}

namespace {

struct Parser {
  std::string_view text;  // whitespace already stripped
  std::size_t pos = 0;
  const Alphabet& alphabet;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(msg + " at position " + std::to_string(pos));
  }

  // atom := lowercase | uppercase | '(' sequence ')'
  Word parse_atom() {
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Word inner = parse_sequence(false);
      if (eof() || peek() != ')') fail("missing ')'");
      ++pos;
      return inner;
    }
    const bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
    const char lower = upper ? static_cast<char>(std::tolower(static_cast<unsigned char>(c))) : c;
    int idx = alphabet.index_of(lower);
    if (!std::isalpha(static_cast<unsigned char>(c)) || idx < 0) {
      fail(std::string("unknown letter '") + c + "' for alphabet \"" + alphabet.names() + "\"");
    }
    ++pos;
    return Word(alphabet, {Letter{static_cast<std::uint32_t>(idx), upper ? -1 : +1}});
  }

  long long parse_exponent() {
    ++pos;  // consume '^'
    std::size_t start = pos;
    if (!eof() && (peek() == '-' || peek() == '+')) ++pos;
    std::size_t digits_start = pos;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == digits_start) fail("malformed exponent");
    long long value = 0;
    auto res = std::from_chars(text.data() + start, text.data() + pos, value);
    if (res.ec == std::errc::result_out_of_range) {
      throw limit_error("exponent overflow beyond the word-length cap of " +
                        std::to_string(limits::max_word_length()));
    }
    return value;
  }

  Word parse_sequence(bool top) {
    std::vector<Letter> acc;
    const std::size_t cap = limits::max_word_length();
    while (!eof()) {
      char c = peek();
      if (c == ')') {
        if (top) fail("unexpected ')'");
        break;
      }
      if (c == '^') fail("exponent without a preceding letter or group");
      Word item = parse_atom();
      if (!eof() && peek() == '^') {
        item = power(item, parse_exponent());
      }
      append_reduced(acc, item.letters());
      if (acc.size() > cap) {
        throw limit_error("word exceeds the word-length cap of " + std::to_string(cap));
      }
    }
    return Word(alphabet, std::move(acc));
  }
};

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::string stripped;
  stripped.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) stripped.push_back(c);
  }
  Parser p{stripped, 0, alphabet};
  return p.parse_sequence(true);
}

std::string render(const Word& w) {
  std::string out;
  const auto& letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const std::size_t run = j - i;
    out.push_back(w.alphabet().name(letters[i].index));
    if (letters[i].sign < 0) {
      out += "^-" + std::to_string(run);
    } else if (run > 1) {
      out += "^" + std::to_string(run);
    }
    i = j;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << render(w);
}

}  // namespace stallings
