#include "stallings/pullback.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "stallings/errors.hpp"
#include "stallings/limits.hpp"

namespace stallings {

StallingsGraph pullback(const StallingsGraph& gh, const StallingsGraph& gk) {
  if (!gh.folded() || !gk.folded()) {
    throw std::invalid_argument("pullback: both factors must be folded");
  }
  if (gh.alphabet() != gk.alphabet()) {
    throw std::invalid_argument("pullback: alphabet mismatch (\"" + gh.alphabet().names() +
                                "\" vs \"" + gk.alphabet().names() + "\")");
  }
  const std::size_t r = gh.alphabet().size();
  const std::uint64_t stride = gk.num_vertices();
  const std::size_t cap = limits::max_vertices();

  std::unordered_map<std::uint64_t, VertexId> ids;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  auto intern = [&](VertexId u, VertexId v) -> VertexId {
    auto [it, fresh] = ids.try_emplace(static_cast<std::uint64_t>(u) * stride + v,
                                       static_cast<VertexId>(pairs.size()));
    if (fresh) {
      if (pairs.size() >= cap) {
        throw limit_error("pullback exceeds the vertex cap of " + std::to_string(cap) +
                          " (factors have " + std::to_string(gh.num_vertices()) + " and " +
                          std::to_string(gk.num_vertices()) + " vertices)");
      }
      pairs.emplace_back(u, v);
    }
    return it->second;
  };

  intern(gh.base(), gk.base());
  std::vector<Edge> edges;
  // Processing pairs in discovery order doubles as the BFS queue; each
  // pair's forward edges are emitted exactly once, when the pair is reached.
  for (VertexId p = 0; p < pairs.size(); ++p) {
    const auto [u, v] = pairs[p];
    for (std::uint32_t x = 0; x < r; ++x) {
      const VertexId uf = gh.forward(u, x), vf = gk.forward(v, x);
      if (uf != kNoVertex && vf != kNoVertex) {
        edges.push_back({p, x, intern(uf, vf)});
      }
      const VertexId ub = gh.backward(u, x), vb = gk.backward(v, x);
      if (ub != kNoVertex && vb != kNoVertex) {
        intern(ub, vb);  // edge recorded when that pair is processed
      }
    }
  }
  return StallingsGraph(gh.alphabet(), pairs.size(), 0, std::move(edges), true);
}

int intersection_rank(const std::vector<Word>& gens_h, const std::vector<Word>& gens_k,
                      const Alphabet& alphabet) {
  return rank(pullback(subgroup(gens_h, alphabet), subgroup(gens_k, alphabet)));
}

}  // namespace stallings
