#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "hopfgraph/errors.hpp"

namespace hopfgraph {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Edge species label ("1,2,3,..."); 0 is rejected by validate().
struct EdgeType {
  std::uint32_t value = 1;
  friend auto operator<=>(const EdgeType&, const EdgeType&) = default;
};

enum class LegDirection : std::uint8_t { Incoming, Outgoing };

struct InternalEdge {
  EdgeId id{};
  VertexId source{};
  VertexId target{};
  EdgeType etype{};

  bool is_self_loop() const { return source == target; }
};

// Half-open edge at `vertex`; Outgoing points away from the vertex.
struct ExternalEdge {
  EdgeId id{};
  VertexId vertex{};
  LegDirection direction{};
  EdgeType etype{};
};

// An oriented graph with typed internal edges (multi-edges and self-loops
// allowed) and typed external legs. Immutable once built; the empty graph
// acts as the algebra unit downstream.
class OrientedGraph {
public:
  OrientedGraph() = default;

  OrientedGraph(std::vector<VertexId> vertices,
                std::vector<InternalEdge> internal,
                std::vector<ExternalEdge> external)
      : vertices_(std::move(vertices)),
        internal_(std::move(internal)),
        external_(std::move(external)) {
    std::sort(vertices_.begin(), vertices_.end());
  }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<InternalEdge>& internal_edges() const { return internal_; }
  const std::vector<ExternalEdge>& external_edges() const { return external_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t internal_count() const { return internal_.size(); }
  std::size_t external_count() const { return external_.size(); }

  bool empty() const {
    return vertices_.empty() && internal_.empty() && external_.empty();
  }

  bool has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  VertexId max_vertex_id() const {
    return vertices_.empty() ? 0 : vertices_.back();
  }

  EdgeId max_edge_id() const {
    EdgeId m = 0;
    for (const auto& e : internal_) m = std::max(m, e.id);
    for (const auto& x : external_) m = std::max(m, x.id);
    return m;
  }

private:
  std::vector<VertexId> vertices_;  // sorted
  std::vector<InternalEdge> internal_;
  std::vector<ExternalEdge> external_;
};

// Checks the type invariants and returns the graph unchanged.
inline const OrientedGraph& validate(const OrientedGraph& g) {
  const auto& vs = g.vertices();
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (vs[i] == vs[i - 1]) {
      throw GraphError(errc::duplicate_id,
                       "duplicate vertex id " + std::to_string(vs[i]));
    }
  }
  std::unordered_set<EdgeId> ids;
  auto check_id = [&](EdgeId id) {
    if (!ids.insert(id).second) {
      throw GraphError(errc::duplicate_id,
                       "duplicate edge id " + std::to_string(id));
    }
  };
  for (const auto& e : g.internal_edges()) {
    check_id(e.id);
    if (e.etype.value == 0) {
      throw GraphError(errc::non_positive_type,
                       "edge " + std::to_string(e.id) + " has type 0");
    }
    if (!g.has_vertex(e.source) || !g.has_vertex(e.target)) {
      throw GraphError(errc::dangling_endpoint,
                       "edge " + std::to_string(e.id) +
                           " references a missing vertex");
    }
  }
  for (const auto& x : g.external_edges()) {
    check_id(x.id);
    if (x.etype.value == 0) {
      throw GraphError(errc::non_positive_type,
                       "leg " + std::to_string(x.id) + " has type 0");
    }
    if (!g.has_vertex(x.vertex)) {
      throw GraphError(errc::dangling_endpoint,
                       "leg " + std::to_string(x.id) +
                           " references a missing vertex");
    }
  }
  return g;
}

// Convenience for building graphs in code and tests; build() validates.
class GraphBuilder {
public:
  VertexId add_vertex() {
    VertexId v = next_vertex_++;
    vertices_.push_back(v);
    return v;
  }

  GraphBuilder& vertex(VertexId v) {
    vertices_.push_back(v);
    next_vertex_ = std::max(next_vertex_, v + 1);
    return *this;
  }

  GraphBuilder& edge(VertexId source, VertexId target, std::uint32_t type = 1) {
    internal_.push_back({next_edge_++, source, target, EdgeType{type}});
    return *this;
  }

  GraphBuilder& leg_in(VertexId v, std::uint32_t type = 1) {
    external_.push_back({next_edge_++, v, LegDirection::Incoming, EdgeType{type}});
    return *this;
  }

  GraphBuilder& leg_out(VertexId v, std::uint32_t type = 1) {
    external_.push_back({next_edge_++, v, LegDirection::Outgoing, EdgeType{type}});
    return *this;
  }

  OrientedGraph build() const {
    OrientedGraph g(vertices_, internal_, external_);
    validate(g);
    return g;
  }

private:
  std::vector<VertexId> vertices_;
  std::vector<InternalEdge> internal_;
  std::vector<ExternalEdge> external_;
  VertexId next_vertex_ = 0;
  EdgeId next_edge_ = 0;
};

// Disjoint union; ids of `b` are shifted above those of `a`.
inline OrientedGraph disjoint_union(const OrientedGraph& a,
                                    const OrientedGraph& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  VertexId voff = a.vertices().empty() ? 0 : a.max_vertex_id() + 1;
  EdgeId eoff = a.max_edge_id() + 1;

  std::vector<VertexId> vs = a.vertices();
  for (VertexId v : b.vertices()) vs.push_back(v + voff);
  std::vector<InternalEdge> in = a.internal_edges();
  for (auto e : b.internal_edges()) {
    e.id += eoff;
    e.source += voff;
    e.target += voff;
    in.push_back(e);
  }
  std::vector<ExternalEdge> ex = a.external_edges();
  for (auto x : b.external_edges()) {
    x.id += eoff;
    x.vertex += voff;
    ex.push_back(x);
  }
  return OrientedGraph(std::move(vs), std::move(in), std::move(ex));
}

// Same graph without its external legs.
inline OrientedGraph strip_external(const OrientedGraph& g) {
  return OrientedGraph(g.vertices(), g.internal_edges(), {});
}

}  // namespace hopfgraph
