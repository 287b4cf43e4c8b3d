#pragma once

#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hopfgraph/graph.hpp"

namespace hopfgraph {

namespace detail {

// Dense index of a graph's vertex set, in sorted order.
class VertexIndex {
public:
  explicit VertexIndex(const OrientedGraph& g) : ids_(g.vertices()) {}

  std::size_t size() const { return ids_.size(); }
  VertexId id(std::size_t i) const { return ids_[i]; }

  std::size_t index(VertexId v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    assert(it != ids_.end() && *it == v);
    return static_cast<std::size_t>(it - ids_.begin());
  }

private:
  std::vector<VertexId> ids_;
};

struct Adjacency {
  // per vertex index: (edge position in internal_edges(), neighbor index)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> undirected;
  std::vector<std::vector<std::size_t>> out;  // neighbor indices, directed
};

inline Adjacency build_adjacency(const OrientedGraph& g, const VertexIndex& ix) {
  Adjacency adj;
  adj.undirected.resize(ix.size());
  adj.out.resize(ix.size());
  const auto& edges = g.internal_edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    std::size_t s = ix.index(edges[k].source);
    std::size_t t = ix.index(edges[k].target);
    adj.out[s].push_back(t);
    adj.undirected[s].emplace_back(k, t);
    if (s != t) adj.undirected[t].emplace_back(k, s);
  }
  return adj;
}

// Component label per vertex index, labels 0..C-1 in order of first vertex.
inline std::vector<std::size_t> component_labels(const OrientedGraph& g,
                                                 const VertexIndex& ix,
                                                 std::size_t* count = nullptr) {
  const std::size_t n = ix.size();
  Adjacency adj = build_adjacency(g, ix);
  std::vector<std::size_t> label(n, n);
  std::size_t next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != n) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (auto [k, w] : adj.undirected[u]) {
        (void)k;
        if (label[w] == n) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

}  // namespace detail

// Vertex sets of the connected components, ordered by smallest member.
// Connectivity follows internal edges in either direction; external legs
// never connect anything.
inline std::vector<std::vector<VertexId>> connected_components(
    const OrientedGraph& g) {
  detail::VertexIndex ix(g);
  std::size_t count = 0;
  auto label = detail::component_labels(g, ix, &count);
  std::vector<std::vector<VertexId>> comps(count);
  for (std::size_t i = 0; i < ix.size(); ++i) {
    comps[label[i]].push_back(ix.id(i));
  }
  return comps;
}

inline bool is_connected(const OrientedGraph& g) {
  detail::VertexIndex ix(g);
  std::size_t count = 0;
  detail::component_labels(g, ix, &count);
  return count == 1;
}

// Some directed cycle as a sequence of internal edge ids (target of each
// edge is the source of the next, cyclically); a self-loop is a cycle of
// length 1. Returns nullopt on cycle-free graphs.
inline std::optional<std::vector<EdgeId>> find_directed_cycle(
    const OrientedGraph& g) {
  for (const auto& e : g.internal_edges()) {
    if (e.is_self_loop()) return std::vector<EdgeId>{e.id};
  }
  detail::VertexIndex ix(g);
  const std::size_t n = ix.size();
  // out-adjacency with edge positions
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out(n);
  const auto& edges = g.internal_edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    out[ix.index(edges[k].source)].emplace_back(k, ix.index(edges[k].target));
  }
  enum : std::uint8_t { White, Grey, Black };
  std::vector<std::uint8_t> color(n, White);
  // iterative DFS keeping the edge path to the current vertex
  struct Frame {
    std::size_t v;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  std::vector<std::size_t> path_edges;  // edge positions along the stack
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] != White) continue;
    color[s] = Grey;
    stack.push_back({s});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < out[f.v].size()) {
        auto [k, w] = out[f.v][f.next++];
        if (color[w] == Grey) {
          // walk back along path_edges until the edge leaving w
          std::vector<EdgeId> cycle;
          cycle.push_back(edges[k].id);
          for (std::size_t i = path_edges.size(); i-- > 0;) {
            std::size_t ek = path_edges[i];
            cycle.push_back(edges[ek].id);
            if (ix.index(edges[ek].source) == w) break;
          }
          std::reverse(cycle.begin(), cycle.end());
          // rotate so the cycle starts at the edge leaving w
          std::rotate(cycle.begin(), cycle.end() - 1, cycle.end());
          return cycle;
        }
        if (color[w] == White) {
          color[w] = Grey;
          path_edges.push_back(k);
          stack.push_back({w});
        }
      } else {
        color[f.v] = Black;
        stack.pop_back();
        if (!path_edges.empty()) path_edges.pop_back();
      }
    }
    path_edges.clear();
  }
  return std::nullopt;
}

inline bool is_cycle_free(const OrientedGraph& g) {
  return !find_directed_cycle(g).has_value();
}

// L = I - V + C, summed over connected components.
inline std::size_t loop_number(const OrientedGraph& g) {
  detail::VertexIndex ix(g);
  std::size_t count = 0;
  detail::component_labels(g, ix, &count);
  std::size_t i = g.internal_count();
  std::size_t v = g.vertex_count();
  assert(i + count >= v && "forest bound violated");
  return i + count - v;
}

namespace detail {

// Internal-edge positions that are bridges. Self-loops and parallel edges
// are never bridges; the DFS skips only the entering edge instance, so a
// parallel copy still lowers the low-link.
inline std::vector<std::size_t> bridge_positions(const OrientedGraph& g) {
  VertexIndex ix(g);
  const std::size_t n = ix.size();
  Adjacency adj = build_adjacency(g, ix);
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, none), low(n, none);
  std::vector<std::size_t> bridges;
  std::size_t timer = 0;

  struct Frame {
    std::size_t v;
    std::size_t in_edge;  // edge position used to enter v
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (disc[s] != none) continue;
    disc[s] = low[s] = timer++;
    stack.push_back({s, none});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj.undirected[f.v].size()) {
        auto [k, w] = adj.undirected[f.v][f.next++];
        if (k == f.in_edge || w == f.v) continue;  // entering edge / self-loop
        if (disc[w] == none) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, k});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        std::size_t v = f.v;
        std::size_t in_edge = f.in_edge;
        stack.pop_back();
        if (!stack.empty()) {
          std::size_t parent = stack.back().v;
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] > disc[parent]) bridges.push_back(in_edge);
        }
      }
    }
  }
  return bridges;
}

}  // namespace detail

// Connected and still connected after cutting any single internal edge.
inline bool is_1pi(const OrientedGraph& g) {
  return is_connected(g) && detail::bridge_positions(g).empty();
}

// Every connected component is 1PI; vacuously true for the empty graph.
inline bool is_locally_1pi(const OrientedGraph& g) {
  return detail::bridge_positions(g).empty();
}

// Per-type half-edge counts at a vertex, orientation-blind; a self-loop
// contributes two half-edges. Trailing zero counts are trimmed.
struct VertexTypeSignature {
  std::vector<std::uint32_t> counts;
  friend auto operator<=>(const VertexTypeSignature&,
                          const VertexTypeSignature&) = default;
};

inline VertexTypeSignature vertex_type(const OrientedGraph& g, VertexId v) {
  if (!g.has_vertex(v)) {
    throw GraphError(errc::unknown_vertex,
                     "vertex " + std::to_string(v) + " not in graph");
  }
  VertexTypeSignature sig;
  auto bump = [&](std::uint32_t type, std::uint32_t by) {
    if (sig.counts.size() < type) sig.counts.resize(type, 0);
    sig.counts[type - 1] += by;
  };
  for (const auto& e : g.internal_edges()) {
    if (e.source == v) bump(e.etype.value, 1);
    if (e.target == v) bump(e.etype.value, 1);
  }
  for (const auto& x : g.external_edges()) {
    if (x.vertex == v) bump(x.etype.value, 1);
  }
  while (!sig.counts.empty() && sig.counts.back() == 0) sig.counts.pop_back();
  return sig;
}

// One vertex per connected component (the smallest member's id), no
// internal edges, external legs reattached to their component's vertex.
inline OrientedGraph residue(const OrientedGraph& g) {
  detail::VertexIndex ix(g);
  std::size_t count = 0;
  auto label = detail::component_labels(g, ix, &count);
  std::vector<VertexId> rep(count, 0);
  std::vector<bool> seen(count, false);
  for (std::size_t i = 0; i < ix.size(); ++i) {
    if (!seen[label[i]]) {
      rep[label[i]] = ix.id(i);
      seen[label[i]] = true;
    }
  }
  std::vector<VertexId> vs(rep.begin(), rep.end());
  std::vector<ExternalEdge> ex;
  ex.reserve(g.external_count());
  for (auto x : g.external_edges()) {
    x.vertex = rep[label[ix.index(x.vertex)]];
    ex.push_back(x);
  }
  return OrientedGraph(std::move(vs), {}, std::move(ex));
}

}  // namespace hopfgraph
