#include "stallings/limits.hpp"

#include <atomic>

namespace stallings::limits {

namespace {
std::atomic<std::size_t> word_cap{1'000'000};
std::atomic<std::size_t> vertex_cap{10'000'000};
}  // namespace

std::size_t max_word_length() { return word_cap.load(std::memory_order_relaxed); }
void set_max_word_length(std::size_t cap) { word_cap.store(cap, std::memory_order_relaxed); }

std::size_t max_vertices() { return vertex_cap.load(std::memory_order_relaxed); }
void set_max_vertices(std::size_t cap) { vertex_cap.store(cap, std::memory_order_relaxed); }

}  // namespace stallings::limits
