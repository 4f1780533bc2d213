#include "stallings/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "stallings/errors.hpp"
#include "stallings/limits.hpp"

namespace stallings {

namespace {

struct UnionFind {
  std::vector<VertexId> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), VertexId{0});
  }

  VertexId find(VertexId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
};

std::vector<std::vector<std::uint32_t>> incidence_lists(std::size_t num_vertices,
                                                        const std::vector<Edge>& edges) {
  std::vector<std::vector<std::uint32_t>> inc(num_vertices);
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    inc[edges[i].src].push_back(i);
    inc[edges[i].dst].push_back(i);  // loops appear twice, matching degree 2
  }
  return inc;
}

void check_connected(std::size_t num_vertices, VertexId base, const std::vector<Edge>& edges) {
  auto inc = incidence_lists(num_vertices, edges);
  std::vector<char> seen(num_vertices, 0);
  std::deque<VertexId> queue{base};
  seen[base] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (std::uint32_t eid : inc[v]) {
      for (VertexId u : {edges[eid].src, edges[eid].dst}) {
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          queue.push_back(u);
        }
      }
    }
  }
  if (reached != num_vertices) {
    throw std::invalid_argument("graph must be connected (" + std::to_string(reached) + " of " +
                                std::to_string(num_vertices) + " vertices reachable from base)");
  }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << "(" << e.src << " -" << e.label << "-> " << e.dst << ")";
}

std::ostream& operator<<(std::ostream& os, const StallingsGraph& g) {
  return os << "StallingsGraph{V=" << g.num_vertices() << ", E=" << g.num_edges()
            << ", base=" << g.base() << (g.folded() ? ", folded" : "") << "}";
}

StallingsGraph::StallingsGraph(Alphabet alphabet, std::size_t num_vertices, VertexId base,
                               std::vector<Edge> edges, bool folded)
    : alphabet_(std::move(alphabet)),
      num_vertices_(num_vertices),
      base_(base),
      edges_(std::move(edges)),
      folded_(folded) {
  if (folded_) build_tables();
}

void StallingsGraph::build_tables() {
  const std::size_t r = rank_size();
  fwd_.assign(num_vertices_ * r, kNoVertex);
  bwd_.assign(num_vertices_ * r, kNoVertex);
  for (const Edge& e : edges_) {
    VertexId& out = fwd_[e.src * r + e.label];
    VertexId& in = bwd_[e.dst * r + e.label];
    if (out != kNoVertex || in != kNoVertex) {
      throw std::invalid_argument("graph is not folded: duplicate " +
                                  std::string(1, alphabet_.name(e.label)) + "-edge at vertex " +
                                  std::to_string(out != kNoVertex ? e.src : e.dst));
    }
    out = e.dst;
    in = e.src;
  }
}

StallingsGraph StallingsGraph::single_vertex(Alphabet alphabet) {
  return StallingsGraph(std::move(alphabet), 1, 0, {}, true);
}

StallingsGraph StallingsGraph::from_edges(Alphabet alphabet, std::size_t num_vertices, VertexId base,
                                          std::vector<Edge> edges, bool folded) {
  if (num_vertices == 0) throw std::invalid_argument("graph needs at least the base vertex");
  if (num_vertices > limits::max_vertices()) {
    throw limit_error("vertex count " + std::to_string(num_vertices) + " exceeds the cap of " +
                      std::to_string(limits::max_vertices()));
  }
  if (base >= num_vertices) throw std::invalid_argument("base vertex out of range");
  for (const Edge& e : edges) {
    if (e.src >= num_vertices || e.dst >= num_vertices) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.label >= alphabet.size()) throw std::invalid_argument("edge label out of range");
  }
  check_connected(num_vertices, base, edges);
  return StallingsGraph(std::move(alphabet), num_vertices, base, std::move(edges), folded);
}

bool operator==(const StallingsGraph& a, const StallingsGraph& b) {
  if (a.alphabet_ != b.alphabet_ || a.num_vertices_ != b.num_vertices_ || a.base_ != b.base_ ||
      a.edges_.size() != b.edges_.size()) {
    return false;
  }
  std::vector<Edge> ea = a.edges_, eb = b.edges_;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

StallingsGraph bouquet(const std::vector<Word>& generators, const Alphabet& alphabet) {
  std::vector<Edge> edges;
  std::size_t num_vertices = 1;
  const VertexId base = 0;
  for (const Word& w : generators) {
    if (w.alphabet() != alphabet) {
      throw std::invalid_argument("bouquet: generator \"" + render(w) + "\" uses alphabet \"" +
                                  w.alphabet().names() + "\", expected \"" + alphabet.names() + "\"");
    }
    if (w.is_identity()) continue;
    if (num_vertices + w.length() - 1 > limits::max_vertices()) {
      throw limit_error("bouquet exceeds the vertex cap of " + std::to_string(limits::max_vertices()));
    }
    VertexId prev = base;
    for (std::size_t i = 0; i < w.length(); ++i) {
      const Letter l = w.letters()[i];
      const VertexId next = i + 1 == w.length() ? base : static_cast<VertexId>(num_vertices++);
      if (l.sign > 0) {
        edges.push_back({prev, l.index, next});
      } else {
        edges.push_back({next, l.index, prev});
      }
      prev = next;
    }
  }
  return StallingsGraph(alphabet, num_vertices, base, std::move(edges), false);
}

StallingsGraph fold(const StallingsGraph& g) {
  if (g.folded()) return g;

  const std::size_t r = g.alphabet().size();
  const std::size_t n = g.num_vertices();
  const std::vector<Edge>& edges = g.edges();

  UnionFind uf(n);
  auto incident = incidence_lists(n, edges);

  std::deque<VertexId> queue(n);
  std::iota(queue.begin(), queue.end(), VertexId{0});
  std::vector<char> queued(n, 1);

  auto enqueue = [&](VertexId v) {
    if (!queued[v]) {
      queued[v] = 1;
      queue.push_back(v);
    }
  };

  // Unite two classes; the smaller original id survives. Incidence lists are
  // merged small-to-large into the survivor's slot.
  auto merge = [&](VertexId a, VertexId b) {
    VertexId ra = uf.find(a), rb = uf.find(b);
    VertexId win = std::min(ra, rb), lose = std::max(ra, rb);
    uf.parent[lose] = win;
    auto& into = incident[win];
    auto& from = incident[lose];
    if (from.size() > into.size()) into.swap(from);
    into.insert(into.end(), from.begin(), from.end());
    from.clear();
    from.shrink_to_fit();
    enqueue(win);
  };

  // One pass over v's incident edges; performs the first violating merge
  // found and reports it, or compacts the list and reports a clean scan.
  std::vector<VertexId> out_seen(r), in_seen(r);
  auto scan_once = [&](VertexId v) -> bool {
    std::fill(out_seen.begin(), out_seen.end(), kNoVertex);
    std::fill(in_seen.begin(), in_seen.end(), kNoVertex);
    auto& list = incident[v];
    std::size_t w = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Edge& e = edges[list[i]];
      const VertexId s = uf.find(e.src), t = uf.find(e.dst);
      if (s != v && t != v) continue;  // stale entry from an earlier merge
      list[w++] = list[i];
      if (s == v) {
        VertexId& slot = out_seen[e.label];
        if (slot == kNoVertex) {
          slot = t;
        } else if (slot != t) {
          list.erase(list.begin() + static_cast<std::ptrdiff_t>(w),
                     list.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          merge(slot, t);
          return true;
        }
      }
      if (t == v) {
        VertexId& slot = in_seen[e.label];
        if (slot == kNoVertex) {
          slot = s;
        } else if (slot != s) {
          list.erase(list.begin() + static_cast<std::ptrdiff_t>(w),
                     list.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          merge(slot, s);
          return true;
        }
      }
    }
    list.resize(w);
    return false;
  };

  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    queued[v] = 0;
    if (uf.find(v) != v) continue;
    if (scan_once(v)) enqueue(uf.find(v));
  }

  // Compact: representatives keep their relative order; identified parallel
  // edges collapse via the sorted unique edge set.
  std::vector<VertexId> newid(n, kNoVertex);
  VertexId next = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (uf.find(v) == v) newid[v] = next++;
  }
  std::vector<Edge> folded_edges;
  folded_edges.reserve(edges.size());
  for (const Edge& e : edges) {
    folded_edges.push_back({newid[uf.find(e.src)], e.label, newid[uf.find(e.dst)]});
  }
  std::sort(folded_edges.begin(), folded_edges.end());
  folded_edges.erase(std::unique(folded_edges.begin(), folded_edges.end()), folded_edges.end());

  return StallingsGraph(g.alphabet(), next, newid[uf.find(g.base())], std::move(folded_edges), true);
}

StallingsGraph core_trim(const StallingsGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 1) return g;
  const std::vector<Edge>& edges = g.edges();

  auto incident = incidence_lists(n, edges);
  std::vector<std::size_t> degree(n);
  for (VertexId v = 0; v < n; ++v) degree[v] = incident[v].size();

  std::vector<char> vertex_alive(n, 1);
  std::vector<char> edge_alive(edges.size(), 1);
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    if (v != g.base() && degree[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    if (!vertex_alive[v] || degree[v] > 1) continue;
    vertex_alive[v] = 0;
    for (std::uint32_t eid : incident[v]) {
      if (!edge_alive[eid]) continue;
      edge_alive[eid] = 0;
      const Edge& e = edges[eid];
      const VertexId u = e.src == v ? e.dst : e.src;
      if (u == v) continue;  // loop; cannot occur at degree <= 1
      if (--degree[u] <= 1 && u != g.base() && vertex_alive[u]) queue.push_back(u);
    }
    degree[v] = 0;
  }

  std::vector<VertexId> newid(n, kNoVertex);
  VertexId next = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (vertex_alive[v]) newid[v] = next++;
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edge_alive[i]) kept.push_back({newid[edges[i].src], edges[i].label, newid[edges[i].dst]});
  }
  return StallingsGraph(g.alphabet(), next, newid[g.base()], std::move(kept), g.folded());
}

int rank(const StallingsGraph& g) {
  const StallingsGraph core = core_trim(g.folded() ? g : fold(g));
  return static_cast<int>(core.num_edges()) - static_cast<int>(core.num_vertices()) + 1;
}

StallingsGraph subgroup(const std::vector<Word>& generators, const Alphabet& alphabet) {
  return core_trim(fold(bouquet(generators, alphabet)));
}

bool contains(const StallingsGraph& g, const Word& w) {
  if (!g.folded()) throw std::invalid_argument("contains: graph must be folded");
  if (w.alphabet() != g.alphabet()) {
    throw std::invalid_argument("contains: word alphabet \"" + w.alphabet().names() +
                                "\" does not match graph alphabet \"" + g.alphabet().names() + "\"");
  }
  VertexId v = g.base();
  for (Letter l : w.letters()) {
    v = g.step(v, l);
    if (v == kNoVertex) return false;
  }
  return v == g.base();
}

namespace {

// Breadth-first traversal from the base, per generator in alphabet order,
// forward edge before backward edge. Shared by basis and canonical_form so
// the two agree on vertex numbering.
struct BfsTree {
  std::vector<VertexId> order;               // discovery order, order[0] == base
  std::vector<VertexId> newid;               // old id -> discovery index
  std::vector<std::vector<Letter>> path;     // reduced base->v letter path, by old id
  std::set<Edge> tree_edges;

  explicit BfsTree(const StallingsGraph& g)
      : newid(g.num_vertices(), kNoVertex), path(g.num_vertices()) {
    const std::size_t r = g.alphabet().size();
    order.reserve(g.num_vertices());
    newid[g.base()] = 0;
    order.push_back(g.base());
    for (std::size_t i = 0; i < order.size(); ++i) {
      const VertexId v = order[i];
      for (std::uint32_t x = 0; x < r; ++x) {
        const VertexId fw = g.forward(v, x);
        if (fw != kNoVertex && newid[fw] == kNoVertex) {
          discover(v, fw, Letter{x, +1});
          tree_edges.insert({v, x, fw});
        }
        const VertexId bw = g.backward(v, x);
        if (bw != kNoVertex && newid[bw] == kNoVertex) {
          discover(v, bw, Letter{x, -1});
          tree_edges.insert({bw, x, v});
        }
      }
    }
    if (order.size() != g.num_vertices()) {
      throw std::logic_error("BFS did not reach every vertex of a connected graph");
    }
  }

  void discover(VertexId parent, VertexId child, Letter l) {
    newid[child] = static_cast<VertexId>(order.size());
    order.push_back(child);
    path[child] = path[parent];
    path[child].push_back(l);
  }
};

}  // namespace

std::vector<Word> basis(const StallingsGraph& g) {
  if (!g.folded()) throw std::invalid_argument("basis: graph must be folded");
  BfsTree bfs(g);
  std::vector<Edge> sorted = g.edges();
  std::sort(sorted.begin(), sorted.end());
  std::vector<Word> words;
  for (const Edge& e : sorted) {
    if (bfs.tree_edges.contains(e)) continue;
    std::vector<Letter> letters = bfs.path[e.src];
    letters.push_back(Letter{e.label, +1});
    const auto& back = bfs.path[e.dst];
    for (auto it = back.rbegin(); it != back.rend(); ++it) letters.push_back(it->inverse());
    words.emplace_back(g.alphabet(), std::move(letters));
  }
  return words;
}

StallingsGraph canonical_form(const StallingsGraph& g) {
  if (!g.folded()) throw std::invalid_argument("canonical_form: graph must be folded");
  BfsTree bfs(g);
  std::vector<Edge> renumbered;
  renumbered.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    renumbered.push_back({bfs.newid[e.src], e.label, bfs.newid[e.dst]});
  }
  std::sort(renumbered.begin(), renumbered.end());
  return StallingsGraph(g.alphabet(), g.num_vertices(), 0, std::move(renumbered), true);
}

std::string to_dot(const StallingsGraph& g) {
  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);
  std::ostringstream os;
  os << "digraph stallings {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    os << "  v" << v;
    if (v == g.base()) os << " [shape=doublecircle]";
    os << ";\n";
  }
  std::vector<Edge> sorted = g.edges();
  std::sort(sorted.begin(), sorted.end());
  for (const Edge& e : sorted) {
    os << "  v" << e.src << " -> v" << e.dst << " [label=\"" << g.alphabet().name(e.label)
       << "\", color=\"" << kPalette[e.label % kPaletteSize] << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace stallings
