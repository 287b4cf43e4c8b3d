#include <doctest.h>

#include "fixtures.hpp"
#include "hopfgraph/analysis.hpp"
#include "hopfgraph/graph.hpp"
#include "hopfgraph/poset.hpp"

using namespace hopfgraph;
using namespace fixtures;

TEST_CASE("validate") {
  SUBCASE("empty graph is valid") {
    OrientedGraph g;
    CHECK_NOTHROW(validate(g));
    CHECK(g.empty());
  }

  SUBCASE("vertex with one leg is valid") {
    GraphBuilder b;
    VertexId v = b.add_vertex();
    CHECK_NOTHROW(b.leg_out(v).build());
  }

  SUBCASE("dangling endpoint") {
    OrientedGraph g({0}, {{0, 0, 7, EdgeType{1}}}, {});
    CHECK_THROWS_WITH_AS(validate(g), doctest::Contains("missing vertex"),
                         GraphError);
    try {
      validate(g);
    } catch (const GraphError& e) {
      CHECK(e.code() == errc::dangling_endpoint);
    }
  }

  SUBCASE("duplicate ids") {
    OrientedGraph dup_vertex({3, 3}, {}, {});
    CHECK_THROWS_AS(validate(dup_vertex), GraphError);
    OrientedGraph dup_edge({0, 1},
                           {{5, 0, 1, EdgeType{1}}, {5, 1, 0, EdgeType{1}}},
                           {});
    CHECK_THROWS_AS(validate(dup_edge), GraphError);
    // internal and external edge ids share one namespace
    OrientedGraph mixed({0, 1}, {{2, 0, 1, EdgeType{1}}},
                        {{2, 0, LegDirection::Incoming, EdgeType{1}}});
    CHECK_THROWS_AS(validate(mixed), GraphError);
  }

  SUBCASE("non-positive type") {
    OrientedGraph g({0, 1}, {{0, 0, 1, EdgeType{0}}}, {});
    try {
      validate(g);
      FAIL("expected a type error");
    } catch (const GraphError& e) {
      CHECK(e.code() == errc::non_positive_type);
    }
  }
}

TEST_CASE("connected_components") {
  CHECK(connected_components(OrientedGraph{}).empty());
  CHECK(connected_components(triangle()) ==
        std::vector<std::vector<VertexId>>{{0, 1, 2}});

  auto with_isolated = disjoint_union(triangle(), isolated_vertex());
  auto comps = connected_components(with_isolated);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<VertexId>{0, 1, 2});
  CHECK(comps[1] == std::vector<VertexId>{3});

  SUBCASE("external legs never connect") {
    GraphBuilder b;
    VertexId u = b.add_vertex();
    VertexId v = b.add_vertex();
    auto g = b.leg_out(u).leg_in(v).build();
    CHECK(connected_components(g).size() == 2);
  }
}

TEST_CASE("find_directed_cycle") {
  CHECK_FALSE(find_directed_cycle(triangle()).has_value());

  auto c2 = find_directed_cycle(two_cycle());
  REQUIRE(c2.has_value());
  CHECK(c2->size() == 2);

  auto loop = find_directed_cycle(self_loop());
  REQUIRE(loop.has_value());
  CHECK(loop->size() == 1);

  SUBCASE("double edge is acyclic") {
    CHECK_FALSE(find_directed_cycle(double_edge()).has_value());
  }

  SUBCASE("returned edges form a cycle") {
    GraphBuilder b;
    VertexId u = b.add_vertex(), v = b.add_vertex(), w = b.add_vertex();
    auto g = b.edge(u, v).edge(v, w).edge(w, u).edge(u, w).build();
    auto cycle = find_directed_cycle(g);
    REQUIRE(cycle.has_value());
    // target of each edge is the source of the next, cyclically
    std::map<EdgeId, InternalEdge> by_id;
    for (const auto& e : g.internal_edges()) by_id[e.id] = e;
    for (std::size_t i = 0; i < cycle->size(); ++i) {
      const auto& cur = by_id.at((*cycle)[i]);
      const auto& next = by_id.at((*cycle)[(i + 1) % cycle->size()]);
      CHECK(cur.target == next.source);
    }
  }
}

TEST_CASE("loop_number") {
  CHECK(loop_number(triangle()) == 1);
  CHECK(loop_number(single_edge()) == 0);
  CHECK(loop_number(disjoint_union(triangle(), single_edge())) == 1);
  CHECK(loop_number(OrientedGraph{}) == 0);
  CHECK(loop_number(self_loop()) == 1);
  CHECK(loop_number(two_cycle()) == 1);
}

TEST_CASE("is_1pi") {
  CHECK(is_1pi(triangle()));
  CHECK_FALSE(is_1pi(single_edge()));
  CHECK(is_1pi(isolated_vertex()));
  CHECK(is_1pi(self_loop()));
  CHECK(is_1pi(two_cycle()));
  CHECK(is_1pi(double_edge()));
  CHECK_FALSE(is_1pi(disjoint_union(triangle(), triangle())));  // disconnected

  SUBCASE("bridge between two cycles") {
    GraphBuilder b;
    VertexId u = b.add_vertex(), v = b.add_vertex();
    auto g = b.edge(u, u).edge(v, v).edge(u, v).build();
    CHECK_FALSE(is_1pi(g));
  }
}

TEST_CASE("is_locally_1pi") {
  CHECK(is_locally_1pi(disjoint_union(triangle(), triangle())));
  CHECK_FALSE(is_locally_1pi(disjoint_union(triangle(), single_edge())));
  CHECK(is_locally_1pi(OrientedGraph{}));
}

TEST_CASE("vertex_type") {
  SUBCASE("self-loop contributes two half-edges") {
    auto g = self_loop();
    CHECK(vertex_type(g, 0).counts == std::vector<std::uint32_t>{2});
  }

  SUBCASE("triangle corner") {
    CHECK(vertex_type(triangle(), 0).counts == std::vector<std::uint32_t>{2});
  }

  SUBCASE("isolated vertex") {
    CHECK(vertex_type(isolated_vertex(), 0).counts.empty());
  }

  SUBCASE("mixed types, legs counted") {
    GraphBuilder b;
    VertexId u = b.add_vertex(), v = b.add_vertex();
    auto g = b.edge(u, v, 2).leg_in(u, 1).leg_out(u, 3).build();
    CHECK(vertex_type(g, u).counts == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(vertex_type(g, v).counts == std::vector<std::uint32_t>{0, 1});
  }

  SUBCASE("unknown vertex") {
    CHECK_THROWS_AS(vertex_type(triangle(), 9), GraphError);
  }
}

TEST_CASE("residue") {
  auto r = residue(triangle());
  CHECK(r.vertex_count() == 1);
  CHECK(r.internal_count() == 0);
  CHECK(r.external_count() == 0);

  CHECK(residue(OrientedGraph{}).empty());

  SUBCASE("legs reattach to the component vertex") {
    GraphBuilder b;
    VertexId u = b.add_vertex(), v = b.add_vertex();
    auto g = b.edge(u, v).leg_out(v).build();
    auto res = residue(g);
    CHECK(res.vertex_count() == 1);
    CHECK(res.internal_count() == 0);
    REQUIRE(res.external_count() == 1);
    CHECK(res.external_edges()[0].direction == LegDirection::Outgoing);
    CHECK(res.external_edges()[0].vertex == res.vertices()[0]);
  }
}

TEST_CASE("reachability_order") {
  auto poset = reachability_order(triangle());
  CHECK(poset.less(0, 1));
  CHECK(poset.less(1, 2));
  CHECK(poset.less(0, 2));
  CHECK_FALSE(poset.less(2, 0));
  CHECK_FALSE(poset.less(0, 0));  // irreflexive

  SUBCASE("incomparable vertices") {
    GraphBuilder b;
    b.add_vertex();
    b.add_vertex();
    auto p = reachability_order(b.build());
    CHECK(p.relation_pairs().empty());
  }

  SUBCASE("rejects cycles") {
    CHECK_THROWS_AS(reachability_order(two_cycle()), GraphError);
    CHECK_THROWS_AS(reachability_order(self_loop()), GraphError);
  }
}

TEST_CASE("is_convex") {
  auto poset = reachability_order(triangle());
  CHECK_FALSE(is_convex(poset, {0, 2}));  // 0 < 1 < 2 with 1 missing
  CHECK(is_convex(poset, {0, 1}));
  CHECK(is_convex(poset, {0, 1, 2}));
  CHECK(is_convex(poset, {}));
}
