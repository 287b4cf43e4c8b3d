#include <doctest.h>

#include "fixtures.hpp"
#include "hopfgraph/algebra.hpp"
#include "hopfgraph/coproduct.hpp"
#include "hopfgraph/tensor.hpp"

using namespace hopfgraph;
using namespace fixtures;

TEST_CASE("rational coefficients are exact and reduced") {
  Rational a(1, 3), b(2, 6);
  CHECK(a == b);
  CHECK(numerator(Rational(-4, 8)) == -1);
  CHECK(denominator(Rational(-4, 8)) == 2);
  CHECK(to_string(Rational(22, 7)) == "22/7");
}

TEST_CASE("from_graph") {
  CHECK(from_graph(OrientedGraph{}, AlgebraMode::Bialgebra) ==
        AlgebraElement::unit());
  CHECK(from_graph(OrientedGraph{}, AlgebraMode::Hopf) ==
        AlgebraElement::unit());

  SUBCASE("residues project to the unit in Hopf mode") {
    auto r = residue(triangle());
    CHECK(from_graph(r, AlgebraMode::Hopf) == AlgebraElement::unit());
    CHECK(from_graph(r, AlgebraMode::Bialgebra) != AlgebraElement::unit());
  }

  SUBCASE("components become factors") {
    auto g = disjoint_union(triangle(), triangle());
    auto x = from_graph(g, AlgebraMode::Bialgebra);
    REQUIRE(x.term_count() == 1);
    const auto& [m, c] = *x.terms().begin();
    CHECK(m.factors.size() == 2);
    CHECK(m.factors[0] == m.factors[1]);
    CHECK(c == 1);
  }

  SUBCASE("disjoint union multiplies") {
    auto g1 = triangle();
    auto g2 = single_edge();
    CHECK(from_graph(disjoint_union(g1, g2), AlgebraMode::Bialgebra) ==
          from_graph(g1, AlgebraMode::Bialgebra) *
              from_graph(g2, AlgebraMode::Bialgebra));
  }
}

TEST_CASE("element arithmetic") {
  auto x = from_graph(triangle(), AlgebraMode::Bialgebra);
  auto y = from_graph(single_edge(), AlgebraMode::Bialgebra);

  CHECK(AlgebraElement::unit() * x == x);
  CHECK(x * y == y * x);
  CHECK(x + (Rational(-1) * x) == AlgebraElement::zero());
  CHECK((x + y) - y == x);
  CHECK(scale(Rational(0), x) == AlgebraElement::zero());

  SUBCASE("squaring duplicates the factor") {
    auto sq = x * x;
    REQUIRE(sq.term_count() == 1);
    CHECK(sq.terms().begin()->first.factors.size() == 2);
  }

  SUBCASE("no zero coefficients survive any operation") {
    auto z = x - x + y * AlgebraElement::zero();
    CHECK(z.terms().empty());
  }
}

TEST_CASE("tensor_combine") {
  auto x = from_graph(triangle(), AlgebraMode::Bialgebra);
  auto y = from_graph(single_edge(), AlgebraMode::Bialgebra);

  SUBCASE("unit slot") {
    auto t = tensor_combine(x, AlgebraElement::unit());
    REQUIRE(t.term_count() == 1);
    CHECK(t.terms().begin()->first[1].is_unit());
  }

  SUBCASE("bilinearity") {
    auto t = tensor_combine(x + y, x);
    CHECK(t == tensor_combine(x, x) + tensor_combine(y, x));
  }

  SUBCASE("scalars multiply through") {
    auto t = tensor_combine(Rational(2) * x, Rational(3) * y);
    REQUIRE(t.term_count() == 1);
    CHECK(t.terms().begin()->second == 6);
  }

  SUBCASE("higher arities") {
    auto t3 = tensor_combine(x, y, x);
    CHECK(t3.arity() == 3);
    auto t4 = tensor_combine(x, y, x, y);
    CHECK(t4.arity() == 4);
  }
}

TEST_CASE("tensor_map_slotwise") {
  auto x = from_graph(triangle(), AlgebraMode::Bialgebra);
  auto y = from_graph(single_edge(), AlgebraMode::Bialgebra);
  auto t = tensor_combine(x, y);

  SUBCASE("identity") {
    auto same =
        tensor_map_slotwise(t, 0, [](const AlgebraElement& e) { return e; });
    CHECK(same == t);
  }

  SUBCASE("splicing a coproduct raises the arity") {
    CoalgebraConfig cfg{};
    auto t3 = tensor_map_slotwise(
        t, 1, [&](const AlgebraElement& e) { return coproduct(e, cfg); });
    CHECK(t3.arity() == 3);
  }

  SUBCASE("slot bounds") {
    CHECK_THROWS_AS(
        tensor_map_slotwise(t, 2, [](const AlgebraElement& e) { return e; }),
        GraphError);
  }
}

TEST_CASE("contract_slot applies the counit") {
  CoalgebraConfig cfg{};
  auto x = from_graph(triangle(), AlgebraMode::Bialgebra);
  auto t = coproduct(x, cfg);
  auto eps = [&](const AlgebraElement& e) { return counit(e, cfg); };
  CHECK(contract_slot(t, 0, eps) == x);
  CHECK(contract_slot(t, 1, eps) == x);
}

TEST_CASE("degree") {
  auto x = from_graph(triangle(), AlgebraMode::Bialgebra);
  const Monomial& m = x.terms().begin()->first;
  CHECK(degree(m, Grading::InternalEdges) == 3);
  CHECK(degree(m, Grading::LoopNumber) == 1);
  CHECK(degree(m, Grading::VertexCount) == 3);
  CHECK(degree(Monomial::unit(), Grading::InternalEdges) == 0);

  SUBCASE("degrees add over factors") {
    auto sq = x * x;
    CHECK(degree(sq.terms().begin()->first, Grading::InternalEdges) == 6);
  }
}

TEST_CASE("tensor equality is slot-sensitive") {
  auto x = from_graph(triangle(), AlgebraMode::Bialgebra);
  auto y = from_graph(single_edge(), AlgebraMode::Bialgebra);
  CHECK(tensor_combine(x, y) != tensor_combine(y, x));
  CHECK(tensor_combine(x, y) == tensor_combine(x, y));
  CHECK(tensor_combine(x + y, x) - tensor_combine(y, x) ==
        tensor_combine(x, x));
}
