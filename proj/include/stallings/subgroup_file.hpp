#ifndef STALLINGS_SUBGROUP_FILE_HPP
#define STALLINGS_SUBGROUP_FILE_HPP

#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stallings/word.hpp"

namespace stallings {

// Plain-text subgroup description: one generator word per line, `#` starts a
// comment, blank lines ignored. An optional first line `alphabet: <letters>`
// fixes the alphabet; otherwise it is inferred from the letters that appear
// (defaulting to "ab" when none do).
class SubgroupFile {
 public:
  static SubgroupFile read(std::istream& in, const std::string& name);
  static SubgroupFile read_path(const std::string& path);

  const std::string& name() const noexcept { return name_; }
  const std::optional<Alphabet>& declared_alphabet() const noexcept { return declared_; }

  // (line number, word text) for each generator line.
  const std::vector<std::pair<int, std::string>>& word_lines() const noexcept { return lines_; }

  // Distinct lowercase letters appearing in the word texts, sorted.
  std::string used_letters() const;

  // Declared alphabet, else inferred from used letters, else "ab".
  Alphabet effective_alphabet() const;

  // Parses every generator line over the given alphabet; parse errors are
  // reported as "<name>:<line>: <reason>".
  std::vector<Word> words(const Alphabet& alphabet) const;

 private:
  std::string name_;
  std::optional<Alphabet> declared_;
  std::vector<std::pair<int, std::string>> lines_;
};

// Alphabet two files agree on: matching declarations, a single declaration,
// or the sorted union of the letters both use ("ab" when there are none).
Alphabet combined_alphabet(const SubgroupFile& first, const SubgroupFile& second);

}  // namespace stallings

#endif  // STALLINGS_SUBGROUP_FILE_HPP
