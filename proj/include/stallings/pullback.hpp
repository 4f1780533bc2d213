#ifndef STALLINGS_PULLBACK_HPP
#define STALLINGS_PULLBACK_HPP

#include <vector>

#include "stallings/graph.hpp"
#include "stallings/word.hpp"

namespace stallings {

// Based component of the labeled fiber product of two folded graphs: pair
// vertex (u, v) has an x-edge to (u', v') iff both factors do. Represents
// the intersection of the two subgroups. The result is folded by
// construction and has at most |V_h| * |V_k| vertices; it is not trimmed.
// Pair vertices are numbered in breadth-first discovery order.
StallingsGraph pullback(const StallingsGraph& gh, const StallingsGraph& gk);

// rank of <gens_h> intersected with <gens_k>.
int intersection_rank(const std::vector<Word>& gens_h, const std::vector<Word>& gens_k,
                      const Alphabet& alphabet);

}  // namespace stallings

#endif  // STALLINGS_PULLBACK_HPP
