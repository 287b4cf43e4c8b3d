#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <vector>

#include "hopfgraph/analysis.hpp"
#include "hopfgraph/canonical.hpp"
#include "hopfgraph/graph.hpp"

namespace hopfgraph {

// Keep realizes the H-algebras (cut edges become external legs), Discard
// the K-algebras (subgraphs keep no external edges at all).
enum class ExternalPolicy : std::uint8_t { Keep, Discard };

// A partition of a graph's vertex set; with connected blocks it is the
// combinatorial avatar of a covering subgraph.
struct VertexPartition {
  std::vector<std::vector<VertexId>> blocks;  // each sorted, sorted by front

  friend auto operator<=>(const VertexPartition&, const VertexPartition&) = default;

  // normalizes block order and inner order
  static VertexPartition of(std::vector<std::vector<VertexId>> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    return VertexPartition{std::move(blocks)};
  }

  static VertexPartition finest(const OrientedGraph& g) {
    VertexPartition p;
    for (VertexId v : g.vertices()) p.blocks.push_back({v});
    return p;
  }

  // the partition into connected components (the coarsest covering one)
  static VertexPartition components(const OrientedGraph& g) {
    return VertexPartition{connected_components(g)};
  }

  std::size_t block_count() const { return blocks.size(); }
};

// Throws NotAPartition unless the blocks are nonempty, disjoint and cover
// exactly the vertex set of g.
inline void validate_partition(const OrientedGraph& g,
                               const VertexPartition& p) {
  std::vector<VertexId> all;
  for (const auto& b : p.blocks) {
    if (b.empty()) {
      throw GraphError(errc::not_a_partition, "empty block");
    }
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i] == all[i - 1]) {
      throw GraphError(errc::not_a_partition,
                       "vertex " + std::to_string(all[i]) +
                           " appears in two blocks");
    }
  }
  if (all != g.vertices()) {
    throw GraphError(errc::not_a_partition,
                     "blocks do not cover the vertex set");
  }
}

namespace detail {

inline bool subset_connected(const OrientedGraph& g,
                             const std::vector<VertexId>& subset) {
  if (subset.empty()) return false;
  if (subset.size() == 1) return true;
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = i;
  std::vector<std::vector<std::size_t>> adj(subset.size());
  for (const auto& e : g.internal_edges()) {
    auto s = pos.find(e.source);
    auto t = pos.find(e.target);
    if (s != pos.end() && t != pos.end()) {
      adj[s->second].push_back(t->second);
      adj[t->second].push_back(s->second);
    }
  }
  std::vector<bool> seen(subset.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == subset.size();
}

}  // namespace detail

inline void validate_covering(const OrientedGraph& g,
                              const VertexPartition& p) {
  validate_partition(g, p);
  for (const auto& b : p.blocks) {
    if (!detail::subset_connected(g, b)) {
      throw GraphError(errc::block_not_connected,
                       "block starting at vertex " + std::to_string(b.front()) +
                           " induces a disconnected subgraph");
    }
  }
}

// The subgraph on P: internal edges with both ends in P; under Keep, the
// original legs at P plus one new leg for every internal edge cut by P
// (same type, direction induced by the surviving end).
inline OrientedGraph induced_subgraph(const OrientedGraph& g,
                                      const std::vector<VertexId>& subset,
                                      ExternalPolicy policy) {
  for (VertexId v : subset) {
    if (!g.has_vertex(v)) {
      throw GraphError(errc::unknown_vertex,
                       "vertex " + std::to_string(v) + " not in graph");
    }
  }
  std::vector<VertexId> vs(subset);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  auto in = [&](VertexId v) {
    return std::binary_search(vs.begin(), vs.end(), v);
  };
  std::vector<InternalEdge> internal;
  std::vector<ExternalEdge> external;
  EdgeId next = g.max_edge_id() + 1;
  for (const auto& e : g.internal_edges()) {
    bool s = in(e.source), t = in(e.target);
    if (s && t) {
      internal.push_back(e);
    } else if (policy == ExternalPolicy::Keep && s) {
      external.push_back({next++, e.source, LegDirection::Outgoing, e.etype});
    } else if (policy == ExternalPolicy::Keep && t) {
      external.push_back({next++, e.target, LegDirection::Incoming, e.etype});
    }
  }
  if (policy == ExternalPolicy::Keep) {
    for (const auto& x : g.external_edges()) {
      if (in(x.vertex)) external.push_back(x);
    }
  }
  return OrientedGraph(std::move(vs), std::move(internal), std::move(external));
}

// Checks Gamma(P)(Q) == Gamma(Q) up to isomorphism.
inline bool subgraph_transitivity_check(const OrientedGraph& g,
                                        const std::vector<VertexId>& outer,
                                        const std::vector<VertexId>& inner,
                                        ExternalPolicy policy) {
  for (VertexId v : inner) {
    if (std::find(outer.begin(), outer.end(), v) == outer.end()) {
      throw GraphError(errc::unknown_vertex,
                       "inner set is not contained in the outer set");
    }
  }
  OrientedGraph two_step =
      induced_subgraph(induced_subgraph(g, outer, policy), inner, policy);
  OrientedGraph direct = induced_subgraph(g, inner, policy);
  return canonical_key(two_step) == canonical_key(direct);
}

// Disjoint union of the induced subgraphs of the blocks. Built directly on
// g's vertex set so blocks keep their vertex ids.
inline OrientedGraph covering_subgraph(const OrientedGraph& g,
                                       const VertexPartition& p,
                                       ExternalPolicy policy) {
  validate_covering(g, p);
  std::map<VertexId, std::size_t> block_of;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    for (VertexId v : p.blocks[b]) block_of[v] = b;
  }
  std::vector<InternalEdge> internal;
  std::vector<ExternalEdge> external;
  EdgeId next = g.max_edge_id() + 1;
  for (const auto& e : g.internal_edges()) {
    if (block_of[e.source] == block_of[e.target]) {
      internal.push_back(e);
    } else if (policy == ExternalPolicy::Keep) {
      external.push_back({next++, e.source, LegDirection::Outgoing, e.etype});
      external.push_back({next++, e.target, LegDirection::Incoming, e.etype});
    }
  }
  if (policy == ExternalPolicy::Keep) {
    for (const auto& x : g.external_edges()) external.push_back(x);
  }
  return OrientedGraph(g.vertices(), std::move(internal), std::move(external));
}

// Shrinks every block to a single vertex (the block's smallest id).
// Cross-block edges survive with induced orientation; intra-block edges
// vanish; external legs follow their vertex's block.
inline OrientedGraph contract(const OrientedGraph& g,
                              const VertexPartition& p) {
  validate_covering(g, p);
  std::map<VertexId, VertexId> rep;
  std::vector<VertexId> vs;
  for (const auto& b : p.blocks) {
    VertexId r = b.front();
    vs.push_back(r);
    for (VertexId v : b) rep[v] = r;
  }
  std::vector<InternalEdge> internal;
  for (auto e : g.internal_edges()) {
    VertexId s = rep[e.source], t = rep[e.target];
    if (s == t) continue;
    e.source = s;
    e.target = t;
    internal.push_back(e);
  }
  std::vector<ExternalEdge> external;
  for (auto x : g.external_edges()) {
    x.vertex = rep[x.vertex];
    external.push_back(x);
  }
  return OrientedGraph(std::move(vs), std::move(internal), std::move(external));
}

// True iff the contracted graph is again cycle-free; g itself must be.
inline bool is_poset_compatible(const OrientedGraph& g,
                                const VertexPartition& p) {
  if (!is_cycle_free(g)) {
    throw GraphError(errc::not_cycle_free, "graph has a directed cycle");
  }
  return is_cycle_free(contract(g, p));
}

// Every block of `fine` contained in a block of `coarse`.
inline bool refines(const VertexPartition& fine, const VertexPartition& coarse) {
  std::map<VertexId, std::size_t> coarse_block;
  for (std::size_t b = 0; b < coarse.blocks.size(); ++b) {
    for (VertexId v : coarse.blocks[b]) coarse_block[v] = b;
  }
  for (const auto& fb : fine.blocks) {
    auto it = coarse_block.find(fb.front());
    if (it == coarse_block.end()) return false;
    for (VertexId v : fb) {
      auto jt = coarse_block.find(v);
      if (jt == coarse_block.end() || jt->second != it->second) return false;
    }
  }
  return true;
}

// gamma/delta: the coarse partition read on the delta-contracted vertices.
// Matches contract()'s block-representative convention, so
// contract(contract(g, delta), quotient_partition(gamma, delta)) makes sense.
inline VertexPartition quotient_partition(const VertexPartition& coarse,
                                          const VertexPartition& fine) {
  std::map<VertexId, VertexId> fine_rep;
  for (const auto& b : fine.blocks) {
    for (VertexId v : b) fine_rep[v] = b.front();
  }
  std::vector<std::vector<VertexId>> blocks;
  for (const auto& cb : coarse.blocks) {
    std::vector<VertexId> reps;
    for (VertexId v : cb) {
      VertexId r = fine_rep.at(v);
      if (std::find(reps.begin(), reps.end(), r) == reps.end()) {
        reps.push_back(r);
      }
    }
    blocks.push_back(std::move(reps));
  }
  return VertexPartition::of(std::move(blocks));
}

}  // namespace hopfgraph
