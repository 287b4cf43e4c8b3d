#include <doctest.h>

#include "fixtures.hpp"
#include "hopfgraph/checker.hpp"
#include "hopfgraph/coproduct.hpp"

using namespace hopfgraph;
using namespace fixtures;

using CV = CoverVariant;
using AM = AlgebraMode;
using EP = ExternalPolicy;

namespace {

Rational max_coeff(const Tensor2& t) {
  Rational m = 0;
  for (const auto& [k, c] : t.terms()) {
    if (c > m) m = c;
  }
  return m;
}

}  // namespace

TEST_CASE("the ten displayed triangle coproducts") {
  auto t = triangle();

  struct Row {
    CoalgebraConfig cfg;
    std::size_t terms;
    Rational top;
  };
  const Row rows[] = {
      {{CV::Full, AM::Bialgebra, EP::Keep}, 5, 1},
      {{CV::Full, AM::Hopf, EP::Keep}, 5, 1},
      {{CV::Locally1PI, AM::Bialgebra, EP::Keep}, 2, 1},
      {{CV::Locally1PI, AM::Hopf, EP::Keep}, 2, 1},
      {{CV::PosetCompatible, AM::Bialgebra, EP::Keep}, 4, 1},
      {{CV::PosetCompatible, AM::Hopf, EP::Keep}, 4, 1},
      {{CV::Full, AM::Bialgebra, EP::Discard}, 4, 2},
      {{CV::Full, AM::Hopf, EP::Discard}, 4, 2},
      // cycle-free variant with discarded externals: the 2-cycle term drops
      {{CV::PosetCompatible, AM::Bialgebra, EP::Discard}, 3, 2},
      {{CV::PosetCompatible, AM::Hopf, EP::Discard}, 3, 2},
  };
  for (const auto& row : rows) {
    CAPTURE(static_cast<int>(row.cfg.variant));
    Tensor2 d = coproduct(t, row.cfg);
    CHECK(d.term_count() == row.terms);
    CHECK(max_coeff(d) == row.top);
  }

  CHECK(cut_coproduct(t, EP::Keep).term_count() == 4);
  CHECK(cut_coproduct(t, EP::Discard).term_count() == 4);

  SUBCASE("the golden suite compares full tensors, not just counts") {
    auto report = golden_suite();
    CHECK(report.passed());
    CHECK(report.instances_run == 10);
  }
}

TEST_CASE("coproduct structure of the triangle") {
  auto t = triangle();
  auto x = from_graph(t, AM::Hopf);
  const Monomial t_monomial = x.terms().begin()->first;

  SUBCASE("Hopf full coproduct contains both trivial terms") {
    Tensor2 d = coproduct(t, {CV::Full, AM::Hopf, EP::Keep});
    Rational left = 0, right = 0;
    for (const auto& [key, c] : d.terms()) {
      if (key[0].is_unit() && key[1] == t_monomial) left = c;
      if (key[1].is_unit() && key[0] == t_monomial) right = c;
    }
    CHECK(left == 1);
    CHECK(right == 1);
  }

  SUBCASE("the mixed right factors are the double edge and the 2-cycle") {
    Tensor2 d = coproduct(t, {CV::Full, AM::Hopf, EP::Keep});
    CanonicalKey dd = canonical_key(double_edge());
    CanonicalKey c2 = canonical_key(two_cycle());
    std::size_t dd_terms = 0, c2_terms = 0;
    for (const auto& [key, c] : d.terms()) {
      (void)c;
      if (key[0].is_unit() || key[1].is_unit()) continue;
      REQUIRE(key[1].factors.size() == 1);
      if (key[1].factors[0] == dd) ++dd_terms;
      if (key[1].factors[0] == c2) ++c2_terms;
    }
    CHECK(dd_terms == 2);
    CHECK(c2_terms == 1);
  }

  SUBCASE("discard collides the two double-edge terms into coefficient 2") {
    Tensor2 d = coproduct(t, {CV::Full, AM::Hopf, EP::Discard});
    CanonicalKey dd = canonical_key(double_edge());
    bool found = false;
    for (const auto& [key, c] : d.terms()) {
      if (!key[1].is_unit() && key[1].factors.size() == 1 &&
          key[1].factors[0] == dd) {
        CHECK(c == 2);
        found = true;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("counit") {
  CoalgebraConfig bi{CV::Full, AM::Bialgebra, EP::Keep};
  CoalgebraConfig hopf{CV::Full, AM::Hopf, EP::Keep};

  CHECK(counit(AlgebraElement::unit(), bi) == 1);
  CHECK(counit(AlgebraElement::unit(), hopf) == 1);
  CHECK(counit(from_graph(triangle(), AM::Bialgebra), bi) == 0);

  // residues span the degree-zero part of the bialgebra
  auto r = from_graph(residue(triangle()), AM::Bialgebra);
  CHECK(counit(r, bi) == 1);
  CHECK(counit(r, hopf) == 0);

  CHECK(cut_counit(AlgebraElement::unit()) == 1);
  CHECK(cut_counit(from_graph(isolated_vertex(), AM::Bialgebra)) == 0);

  SUBCASE("linearity") {
    auto x = Rational(3) * AlgebraElement::unit() +
             Rational(2) * from_graph(triangle(), AM::Bialgebra);
    CHECK(counit(x, bi) == 3);
  }
}

TEST_CASE("grouplike residues") {
  for (const auto& g : {triangle(), disjoint_union(triangle(), single_edge())}) {
    auto r = residue(g);
    auto x = from_graph(r, AM::Bialgebra);
    CHECK(coproduct(r, {CV::Full, AM::Bialgebra, EP::Keep}) ==
          tensor_combine(x, x));
  }
}

TEST_CASE("antipode") {
  CoalgebraConfig h1pi{CV::Locally1PI, AM::Hopf, EP::Keep};
  CoalgebraConfig hcf{CV::PosetCompatible, AM::Hopf, EP::Keep};

  CHECK(antipode(AlgebraElement::unit(), h1pi) == AlgebraElement::unit());

  SUBCASE("primitive elements flip sign") {
    auto x = from_graph(triangle(), AM::Hopf);
    CHECK(antipode(x, h1pi) == Rational(-1) * x);
  }

  SUBCASE("convolution identity in H_CF") {
    auto x = from_graph(triangle(), AM::Hopf);
    auto s = [&](const AlgebraElement& e) { return antipode(e, hcf); };
    auto conv = multiply_slots(tensor_map_slotwise(coproduct(x, hcf), 0, s));
    CHECK(conv == AlgebraElement::zero());  // counit vanishes on the triangle
  }

  SUBCASE("antipode is an involution here") {
    auto x = from_graph(triangle(), AM::Hopf);
    CHECK(antipode(antipode(x, hcf), hcf) == x);
  }

  SUBCASE("bialgebra mode has no antipode") {
    CoalgebraConfig bi{CV::Full, AM::Bialgebra, EP::Keep};
    CHECK_THROWS_AS(antipode(AlgebraElement::unit(), bi), GraphError);
  }

  SUBCASE("cut antipode negates a single vertex") {
    auto v = from_graph(isolated_vertex(), AM::Bialgebra);
    CHECK(cut_coproduct(isolated_vertex()) ==
          tensor_combine(v, AlgebraElement::unit()) +
              tensor_combine(AlgebraElement::unit(), v));
    CHECK(cut_antipode(v) == Rational(-1) * v);
  }

  SUBCASE("cut antipode convolution on the triangle") {
    auto x = from_graph(triangle(), AM::Bialgebra);
    auto s = [](const AlgebraElement& e) { return cut_antipode(e); };
    auto conv = multiply_slots(tensor_map_slotwise(cut_coproduct(x), 0, s));
    CHECK(conv == AlgebraElement::zero());
  }

  SUBCASE("discard-policy antipode rejects graphs with legs") {
    // legs put the generator outside the span of the discard coalgebra,
    // so the recursion flags it instead of looping
    GraphBuilder b;
    VertexId v = b.add_vertex();
    auto g = b.leg_in(v).build();
    CHECK_THROWS_AS(
        cut_antipode(from_graph(g, AM::Bialgebra), EP::Discard), GraphError);
  }
}

TEST_CASE("coaction") {
  SUBCASE("single vertex is grouplike") {
    auto v = isolated_vertex();
    auto x = from_graph(v, AM::Bialgebra);
    CHECK(coaction(v, CoactionSide::Left) == tensor_combine(x, x));
  }

  SUBCASE("triangle coaction matches the cycle-free coproduct") {
    CHECK(coaction(triangle(), CoactionSide::Left) ==
          coproduct(triangle(),
                    {CV::PosetCompatible, AM::Bialgebra, EP::Keep}));
    CHECK(coaction(triangle(), CoactionSide::Left).term_count() == 4);
  }

  SUBCASE("right coaction transposes the slots") {
    CHECK(coaction(triangle(), CoactionSide::Right) ==
          swap_slots(coaction(triangle(), CoactionSide::Left)));
  }

  SUBCASE("empty graph") {
    auto u = AlgebraElement::unit();
    CHECK(coaction(OrientedGraph{}, CoactionSide::Left) ==
          tensor_combine(u, u));
  }
}

TEST_CASE("m13") {
  auto x = from_graph(triangle(), AM::Bialgebra);
  auto y = from_graph(single_edge(), AM::Bialgebra);
  auto u = AlgebraElement::unit();

  SUBCASE("multiplies slots one and three") {
    auto t4 = tensor_combine(x, y, x, y);
    auto t3 = m13(t4);
    REQUIRE(t3.term_count() == 1);
    const auto& key = t3.terms().begin()->first;
    CHECK(key[0].factors.size() == 2);  // x * x
    CHECK(degree(key[0], Grading::InternalEdges) == 6);
  }

  SUBCASE("unit absorption") {
    CHECK(m13(tensor_combine(x, y, u, y)) == tensor_combine(x, y, y));
  }

  SUBCASE("linearity") {
    auto lhs = m13(tensor_combine(x + y, y, x, u));
    auto rhs = m13(tensor_combine(x, y, x, u)) +
               m13(tensor_combine(y, y, x, u));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("comodule-coalgebra identity on the triangle") {
  auto t = triangle();
  auto phi = [](const AlgebraElement& e) {
    return coaction(e, CoactionSide::Left);
  };
  auto dc = [](const AlgebraElement& e) { return cut_coproduct(e); };
  Tensor3 lhs = tensor_map_slotwise(coaction(t, CoactionSide::Left), 1, dc);
  Tensor3 rhs =
      m13(tensor_map_slotwise(tensor_map_slotwise(cut_coproduct(t), 0, phi),
                              2, phi));
  CHECK(lhs == rhs);
}

TEST_CASE("coproduct requires cycle-free input for poset variants") {
  CHECK_THROWS_AS(
      coproduct(two_cycle(), {CV::PosetCompatible, AM::Bialgebra, EP::Keep}),
      GraphError);
  CHECK_THROWS_AS(cut_coproduct(two_cycle()), GraphError);
  CHECK_NOTHROW(coproduct(two_cycle(), {CV::Full, AM::Bialgebra, EP::Keep}));
}

TEST_CASE("quotient consistency on the triangle") {
  auto project = [](const AlgebraElement& e) { return hopf_project(e); };
  for (auto pol : {EP::Keep, EP::Discard}) {
    CoalgebraConfig bi{CV::Full, AM::Bialgebra, pol};
    CoalgebraConfig hopf{CV::Full, AM::Hopf, pol};
    Tensor2 projected = tensor_map_slotwise(
        tensor_map_slotwise(coproduct(triangle(), bi), 0, project), 1,
        project);
    CHECK(projected == coproduct(triangle(), hopf));
  }
}
