#include "stallings/subgroup_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include "stallings/errors.hpp"

namespace stallings {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

constexpr std::string_view kAlphabetKey = "alphabet:";

}  // namespace

SubgroupFile SubgroupFile::read(std::istream& in, const std::string& name) {
  SubgroupFile file;
  file.name_ = name;
  std::string line;
  int lineno = 0;
  bool saw_content = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!saw_content && line.starts_with(kAlphabetKey)) {
      std::string letters;
      for (char c : line.substr(kAlphabetKey.size())) {
        if (!std::isspace(static_cast<unsigned char>(c))) letters.push_back(c);
      }
      try {
        file.declared_ = Alphabet(letters);
      } catch (const std::invalid_argument& e) {
        throw parse_error(name + ":" + std::to_string(lineno) + ": " + e.what());
      }
      saw_content = true;
      continue;
    }
    saw_content = true;
    file.lines_.emplace_back(lineno, line);
  }
  return file;
}

SubgroupFile SubgroupFile::read_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open subgroup file \"" + path + "\"");
  return read(in, path);
}

std::string SubgroupFile::used_letters() const {
  std::set<char> letters;
  for (const auto& [lineno, text] : lines_) {
    for (char c : text) {
      if (std::islower(static_cast<unsigned char>(c))) {
        letters.insert(c);
      } else if (std::isupper(static_cast<unsigned char>(c))) {
        letters.insert(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      }
    }
  }
  return {letters.begin(), letters.end()};
}

Alphabet SubgroupFile::effective_alphabet() const {
  if (declared_) return *declared_;
  const std::string used = used_letters();
  return Alphabet(used.empty() ? "ab" : used);
}

std::vector<Word> SubgroupFile::words(const Alphabet& alphabet) const {
  std::vector<Word> out;
  out.reserve(lines_.size());
  for (const auto& [lineno, text] : lines_) {
    try {
      out.push_back(parse_word(text, alphabet));
    } catch (const parse_error& e) {
      throw parse_error(name_ + ":" + std::to_string(lineno) + ": " + e.what());
    } catch (const limit_error& e) {
      throw limit_error(name_ + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

Alphabet combined_alphabet(const SubgroupFile& first, const SubgroupFile& second) {
  const auto& da = first.declared_alphabet();
  const auto& db = second.declared_alphabet();
  if (da && db) {
    if (*da != *db) {
      throw parse_error("subgroup files declare different alphabets: \"" + da->names() +
                        "\" (" + first.name() + ") vs \"" + db->names() + "\" (" + second.name() +
                        ")");
    }
    return *da;
  }
  if (da) return *da;
  if (db) return *db;
  std::string merged;
  for (char c : first.used_letters() + second.used_letters()) {
    if (merged.find(c) == std::string::npos) merged.push_back(c);
  }
  std::sort(merged.begin(), merged.end());
  return Alphabet(merged.empty() ? "ab" : merged);
}

}  // namespace stallings
