#ifndef STALLINGS_ERRORS_HPP
#define STALLINGS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stallings {

// Input text that does not conform to the word or subgroup-file syntax.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured size cap (word length, vertex count) would be exceeded.
class limit_error : public std::runtime_error {
 public:
  explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stallings

#endif  // STALLINGS_ERRORS_HPP
