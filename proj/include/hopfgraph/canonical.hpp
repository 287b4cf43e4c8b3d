#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "hopfgraph/analysis.hpp"
#include "hopfgraph/graph.hpp"

namespace hopfgraph {

// Total-order-comparable encoding of a graph up to isomorphism
// (isomorphism preserves incidence, orientation and edge types; parallel
// edges and parallel legs are interchangeable).
//
// Layout: [V, C, I, X] then I sorted internal triples (src, tgt, type)
// then X sorted leg triples (vertex, dir, type), all under the minimal
// vertex labeling. C is the component count (redundant but convenient).
struct CanonicalKey {
  std::vector<std::uint32_t> code;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

  std::size_t vertex_count() const { return code[0]; }
  std::size_t component_count() const { return code[1]; }
  std::size_t internal_count() const { return code[2]; }
  std::size_t external_count() const { return code[3]; }

  bool is_empty_graph() const { return code[0] == 0 && code[3] == 0; }

  // loop number of the encoded graph
  std::size_t loop_count() const {
    return internal_count() + component_count() - vertex_count();
  }
};

namespace detail {

// Stable ranking: distinct values, sorted, mapped to 0,1,2,...
template <class T>
std::vector<std::uint32_t> rank_values(const std::vector<T>& values) {
  std::vector<T> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::uint32_t> ranks(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    ranks[i] = static_cast<std::uint32_t>(
        std::lower_bound(sorted.begin(), sorted.end(), values[i]) -
        sorted.begin());
  }
  return ranks;
}

// Initial iso-invariant vertex coloring from the local half-edge profiles.
inline std::vector<std::uint32_t> initial_colors(const OrientedGraph& g,
                                                 const VertexIndex& ix) {
  const std::size_t n = ix.size();
  using Profile = std::vector<std::uint32_t>;
  std::vector<Profile> init(n);
  for (const auto& e : g.internal_edges()) {
    std::size_t s = ix.index(e.source), t = ix.index(e.target);
    if (s == t) {
      init[s].insert(init[s].end(), {2, e.etype.value});
    } else {
      init[s].insert(init[s].end(), {0, e.etype.value});
      init[t].insert(init[t].end(), {1, e.etype.value});
    }
  }
  for (const auto& x : g.external_edges()) {
    std::size_t v = ix.index(x.vertex);
    init[v].insert(init[v].end(),
                   {x.direction == LegDirection::Outgoing ? 3u : 4u,
                    x.etype.value});
  }
  // profiles are multisets of (kind, type) pairs: sort them
  for (auto& p : init) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::size_t i = 0; i + 1 < p.size(); i += 2) {
      pairs.emplace_back(p[i], p[i + 1]);
    }
    std::sort(pairs.begin(), pairs.end());
    p.clear();
    for (auto [a, b] : pairs) {
      p.push_back(a);
      p.push_back(b);
    }
  }
  return rank_values(init);
}

// Refines a coloring by neighbor colors to a fixpoint. Colors stay
// canonical ranks, so the result is iso-invariant given an iso-invariant
// start.
inline std::vector<std::uint32_t> refine_colors(
    const OrientedGraph& g, const VertexIndex& ix,
    std::vector<std::uint32_t> colors) {
  const std::size_t n = ix.size();
  colors = rank_values(colors);  // seeds may carry gaps
  std::size_t classes =
      colors.empty()
          ? 0
          : 1 + *std::max_element(colors.begin(), colors.end());
  while (true) {
    using Sig = std::vector<std::uint32_t>;
    std::vector<Sig> sigs(n);
    for (std::size_t v = 0; v < n; ++v) sigs[v].push_back(colors[v]);
    std::vector<std::vector<std::array<std::uint32_t, 3>>> nb(n);
    for (const auto& e : g.internal_edges()) {
      std::size_t s = ix.index(e.source), t = ix.index(e.target);
      if (s == t) continue;
      nb[s].push_back({0, e.etype.value, colors[t]});
      nb[t].push_back({1, e.etype.value, colors[s]});
    }
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(nb[v].begin(), nb[v].end());
      for (const auto& a : nb[v]) {
        sigs[v].insert(sigs[v].end(), a.begin(), a.end());
      }
    }
    std::vector<std::uint32_t> next = rank_values(sigs);
    std::size_t next_classes =
        next.empty() ? 0 : 1 + *std::max_element(next.begin(), next.end());
    if (next_classes == classes) break;
    colors = std::move(next);
    classes = next_classes;
  }
  return colors;
}

inline std::vector<std::uint32_t> encode_with_labels(
    const OrientedGraph& g, const VertexIndex& ix,
    const std::vector<std::uint32_t>& label, std::size_t components) {
  std::vector<std::array<std::uint32_t, 3>> internals;
  internals.reserve(g.internal_count());
  for (const auto& e : g.internal_edges()) {
    internals.push_back({label[ix.index(e.source)], label[ix.index(e.target)],
                         e.etype.value});
  }
  std::sort(internals.begin(), internals.end());
  std::vector<std::array<std::uint32_t, 3>> externals;
  externals.reserve(g.external_count());
  for (const auto& x : g.external_edges()) {
    externals.push_back({label[ix.index(x.vertex)],
                         x.direction == LegDirection::Outgoing ? 1u : 0u,
                         x.etype.value});
  }
  std::sort(externals.begin(), externals.end());

  std::vector<std::uint32_t> code;
  code.reserve(4 + 3 * (internals.size() + externals.size()));
  code.push_back(static_cast<std::uint32_t>(ix.size()));
  code.push_back(static_cast<std::uint32_t>(components));
  code.push_back(static_cast<std::uint32_t>(internals.size()));
  code.push_back(static_cast<std::uint32_t>(externals.size()));
  for (const auto& t : internals) code.insert(code.end(), t.begin(), t.end());
  for (const auto& t : externals) code.insert(code.end(), t.begin(), t.end());
  return code;
}

}  // namespace detail

// Isomorphism-invariant and complete: key(G1) == key(G2) iff G1 and G2 are
// isomorphic. Individualization-refinement search: refine to a fixpoint,
// split the first non-singleton color class on each of its members in
// turn, and take the minimum encoding over the discrete leaves. The leaf
// set of isomorphic graphs coincides, so the minimum is a complete
// invariant; comfortable up to a dozen vertices (complete multidigraphs
// stay factorial, nothing refines them).
inline CanonicalKey canonical_key(const OrientedGraph& g) {
  detail::VertexIndex ix(g);
  const std::size_t n = ix.size();
  std::size_t components = 0;
  detail::component_labels(g, ix, &components);
  if (n == 0) {
    return CanonicalKey{{0, 0, 0, 0}};
  }

  std::vector<std::uint32_t> best;
  auto rec = [&](auto&& self, const std::vector<std::uint32_t>& colors) -> void {
    // first color class with more than one member, by color value
    std::uint32_t classes = 1 + *std::max_element(colors.begin(), colors.end());
    if (classes == n) {
      // discrete: ranks are the labels
      std::vector<std::uint32_t> code =
          detail::encode_with_labels(g, ix, colors, components);
      if (best.empty() || code < best) best = std::move(code);
      return;
    }
    std::vector<std::size_t> count(classes, 0);
    for (std::uint32_t c : colors) ++count[c];
    std::uint32_t target = 0;
    while (count[target] <= 1) ++target;
    for (std::size_t v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      // individualize v below its class-mates, preserving class order
      std::vector<std::uint32_t> split(n);
      for (std::size_t w = 0; w < n; ++w) {
        split[w] = 2 * colors[w] + (w == v ? 0 : 1);
      }
      self(self, detail::refine_colors(g, ix, std::move(split)));
    }
  };
  rec(rec, detail::refine_colors(g, ix, detail::initial_colors(g, ix)));
  return CanonicalKey{std::move(best)};
}

// Rebuilds the canonical representative encoded by a key: vertices 0..V-1,
// internal edge ids 0..I-1, leg ids I..I+X-1, in code order.
inline OrientedGraph decode_key(const CanonicalKey& k) {
  const auto& c = k.code;
  std::uint32_t n = c[0], ni = c[2], nx = c[3];
  std::vector<VertexId> vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<InternalEdge> internal;
  internal.reserve(ni);
  std::size_t pos = 4;
  for (std::uint32_t i = 0; i < ni; ++i, pos += 3) {
    internal.push_back({i, c[pos], c[pos + 1], EdgeType{c[pos + 2]}});
  }
  std::vector<ExternalEdge> external;
  external.reserve(nx);
  for (std::uint32_t j = 0; j < nx; ++j, pos += 3) {
    external.push_back({ni + j, c[pos],
                        c[pos + 1] == 1 ? LegDirection::Outgoing
                                        : LegDirection::Incoming,
                        EdgeType{c[pos + 2]}});
  }
  return OrientedGraph(std::move(vs), std::move(internal), std::move(external));
}

struct CanonicalForm {
  CanonicalKey key;
  OrientedGraph graph;
};

inline CanonicalForm canonical_form(const OrientedGraph& g) {
  CanonicalKey k = canonical_key(g);
  OrientedGraph rep = decode_key(k);
  return {std::move(k), std::move(rep)};
}

inline bool isomorphic(const OrientedGraph& a, const OrientedGraph& b) {
  return canonical_key(a) == canonical_key(b);
}

}  // namespace hopfgraph
