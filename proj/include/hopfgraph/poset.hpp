#pragma once

#include <vector>

#include "hopfgraph/analysis.hpp"
#include "hopfgraph/graph.hpp"

namespace hopfgraph {

// Strict reachability order on a cycle-free graph: v < w iff there is a
// directed internal-edge path from v to w.
class ReachabilityPoset {
public:
  ReachabilityPoset(std::vector<VertexId> carrier, std::vector<bool> strictly_less)
      : carrier_(std::move(carrier)), less_(std::move(strictly_less)) {}

  const std::vector<VertexId>& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }

  bool less(VertexId v, VertexId w) const {
    return less_at(index(v), index(w));
  }

  bool comparable(VertexId v, VertexId w) const {
    return less(v, w) || less(w, v);
  }

  bool less_at(std::size_t i, std::size_t j) const {
    return less_[i * carrier_.size() + j];
  }

  std::size_t index(VertexId v) const {
    auto it = std::lower_bound(carrier_.begin(), carrier_.end(), v);
    if (it == carrier_.end() || *it != v) {
      throw GraphError(errc::unknown_vertex,
                       "vertex " + std::to_string(v) + " not in poset carrier");
    }
    return static_cast<std::size_t>(it - carrier_.begin());
  }

  std::vector<std::pair<VertexId, VertexId>> relation_pairs() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        if (less_at(i, j)) out.emplace_back(carrier_[i], carrier_[j]);
      }
    }
    return out;
  }

private:
  std::vector<VertexId> carrier_;  // sorted
  std::vector<bool> less_;         // row-major strictly-less matrix
};

inline ReachabilityPoset reachability_order(const OrientedGraph& g) {
  if (auto cycle = find_directed_cycle(g)) {
    throw GraphError(errc::not_cycle_free,
                     "graph has a directed cycle through edge " +
                         std::to_string(cycle->front()));
  }
  detail::VertexIndex ix(g);
  const std::size_t n = ix.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& e : g.internal_edges()) {
    out[ix.index(e.source)].push_back(ix.index(e.target));
  }
  std::vector<bool> less(n * n, false);
  // DFS closure from each vertex; n is small at desk scale
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    stack.assign(1, s);
    std::vector<bool> seen(n, false);
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : out[u]) {
        if (!seen[w]) {
          seen[w] = true;
          less[s * n + w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<VertexId> carrier(n);
  for (std::size_t i = 0; i < n; ++i) carrier[i] = ix.id(i);
  return ReachabilityPoset(std::move(carrier), std::move(less));
}

// S is convex iff x < y < z with x,z in S forces y in S.
inline bool is_convex(const ReachabilityPoset& p,
                      const std::vector<VertexId>& subset) {
  const std::size_t n = p.size();
  std::vector<bool> in(n, false);
  for (VertexId v : subset) in[p.index(v)] = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (!in[x]) continue;
    for (std::size_t z = 0; z < n; ++z) {
      if (!in[z]) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (in[y]) continue;
        if (p.less_at(x, y) && p.less_at(y, z)) return false;
      }
    }
  }
  return true;
}

// S is down-closed iff u < v with v in S forces u in S.
inline bool is_down_closed(const ReachabilityPoset& p,
                           const std::vector<VertexId>& subset) {
  const std::size_t n = p.size();
  std::vector<bool> in(n, false);
  for (VertexId v : subset) in[p.index(v)] = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in[v]) continue;
    for (std::size_t u = 0; u < n; ++u) {
      if (!in[u] && p.less_at(u, v)) return false;
    }
  }
  return true;
}

}  // namespace hopfgraph
