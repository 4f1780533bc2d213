#ifndef STALLINGS_GRAPH_HPP
#define STALLINGS_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "stallings/word.hpp"

namespace stallings {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Edge in positive orientation: src --label--> dst reads the generator;
// traversing dst -> src reads its inverse.
struct Edge {
  VertexId src = 0;
  std::uint32_t label = 0;
  VertexId dst = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

// Based, connected, generator-labeled digraph representing a subgroup of the
// free group on its alphabet. When folded() holds, the graph is deterministic
// and co-deterministic: per vertex and generator, at most one outgoing and at
// most one incoming edge. Instances are immutable; every operation returns a
// fresh value.
class StallingsGraph {
 public:
  static StallingsGraph single_vertex(Alphabet alphabet);

  // Validating constructor for externally assembled graphs. Requires
  // 1 <= num_vertices <= the vertex cap, valid endpoints and labels, a
  // connected graph, and (when folded is claimed) the folding invariant.
  static StallingsGraph from_edges(Alphabet alphabet, std::size_t num_vertices, VertexId base,
                                   std::vector<Edge> edges, bool folded = false);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  VertexId base() const noexcept { return base_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool folded() const noexcept { return folded_; }

  // Unique successor / predecessor lookups; folded graphs only.
  VertexId forward(VertexId v, std::uint32_t label) const { return fwd_[v * rank_size() + label]; }
  VertexId backward(VertexId v, std::uint32_t label) const { return bwd_[v * rank_size() + label]; }
  VertexId step(VertexId v, Letter l) const {
    return l.sign > 0 ? forward(v, l.index) : backward(v, l.index);
  }

  // Structural equality: same alphabet, vertex count, base and edge set
  // (order-insensitive). Meaningful for comparing canonical forms.
  friend bool operator==(const StallingsGraph& a, const StallingsGraph& b);

 private:
  StallingsGraph(Alphabet alphabet, std::size_t num_vertices, VertexId base, std::vector<Edge> edges,
                 bool folded);
  std::size_t rank_size() const noexcept { return alphabet_.size(); }
  void build_tables();

  friend StallingsGraph fold(const StallingsGraph&);
  friend StallingsGraph core_trim(const StallingsGraph&);
  friend StallingsGraph canonical_form(const StallingsGraph&);
  friend StallingsGraph pullback(const StallingsGraph&, const StallingsGraph&);

  Alphabet alphabet_;
  std::size_t num_vertices_;
  VertexId base_;
  std::vector<Edge> edges_;
  bool folded_;
  std::vector<VertexId> fwd_, bwd_;  // dense transition tables, built when folded
};

std::ostream& operator<<(std::ostream& os, const StallingsGraph& g);

// Wedge of one cycle per nonempty generator, all through the base vertex.
// The result is generally unfolded.
StallingsGraph bouquet(const std::vector<Word>& generators, const Alphabet& alphabet);

// Identifies equally-labeled edges sharing a source or a target until the
// folding invariant holds. Preserves the represented subgroup.
StallingsGraph fold(const StallingsGraph& g);

// Iteratively deletes non-base vertices of degree <= 1. The base vertex is
// always retained. Preserves rank and membership read from the base.
StallingsGraph core_trim(const StallingsGraph& g);

// Rank of the represented subgroup: E - V + 1 of the folded, trimmed core.
int rank(const StallingsGraph& g);

// Canonical folded core graph of the subgroup the generators generate:
// core_trim(fold(bouquet(generators))).
StallingsGraph subgroup(const std::vector<Word>& generators, const Alphabet& alphabet);

// True iff w reads from base back to base. Requires a folded graph.
bool contains(const StallingsGraph& g, const Word& w);

// Free basis from a breadth-first spanning tree: one word per non-tree edge,
// path(base->src) * label * path(dst->base). Exactly rank(g) words.
std::vector<Word> basis(const StallingsGraph& g);

// Renumbers vertices by breadth-first traversal from the base, taking each
// generator's forward edge before its backward edge, in alphabet order. Two
// folded trimmed graphs represent the same subgroup iff their canonical
// forms compare equal.
StallingsGraph canonical_form(const StallingsGraph& g);

// DOT rendering; the base vertex is drawn as a double circle and every edge
// carries its generator name as a label plus a per-generator color.
std::string to_dot(const StallingsGraph& g);

}  // namespace stallings

#endif  // STALLINGS_GRAPH_HPP
