#pragma once

#include "hopfgraph/checker.hpp"
#include "hopfgraph/graph.hpp"

namespace fixtures {

using namespace hopfgraph;

// triangle vertices are 0=a, 1=b, 2=c (edges a->b, b->c, a->c)
inline OrientedGraph triangle() { return triangle_graph(); }

inline OrientedGraph single_edge() {
  GraphBuilder b;
  VertexId u = b.add_vertex(), v = b.add_vertex();
  return b.edge(u, v).build();
}

inline OrientedGraph two_cycle() {
  GraphBuilder b;
  VertexId u = b.add_vertex(), v = b.add_vertex();
  return b.edge(u, v).edge(v, u).build();
}

inline OrientedGraph double_edge() {
  GraphBuilder b;
  VertexId u = b.add_vertex(), v = b.add_vertex();
  return b.edge(u, v).edge(u, v).build();
}

inline OrientedGraph self_loop() {
  GraphBuilder b;
  VertexId v = b.add_vertex();
  return b.edge(v, v).build();
}

inline OrientedGraph isolated_vertex() {
  GraphBuilder b;
  b.add_vertex();
  return b.build();
}

}  // namespace fixtures
