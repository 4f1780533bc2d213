#ifndef STALLINGS_LIMITS_HPP
#define STALLINGS_LIMITS_HPP

#include <cstddef>

// Process-wide size caps. Words are tiny in normal use; the caps guard
// against pathological input (huge exponents, quadratic pullbacks).
namespace stallings::limits {

// Maximum number of letters a single word may expand to (default 10^6).
std::size_t max_word_length();
void set_max_word_length(std::size_t cap);

// Maximum number of vertices a graph may have (default 10^7).
std::size_t max_vertices();
void set_max_vertices(std::size_t cap);

}  // namespace stallings::limits

#endif  // STALLINGS_LIMITS_HPP
