#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "hopfgraph/checker.hpp"
#include "hopfgraph/generator.hpp"

using namespace hopfgraph;
using namespace fixtures;

TEST_CASE("generator determinism") {
  GeneratorConfig cfg;
  cfg.max_vertices = 5;
  cfg.max_internal_edges = 5;
  cfg.edge_type_count = 2;
  cfg.external_leg_probability = Rational(1, 3);
  cfg.seed = 7;
  auto a = generate_graphs(cfg, 50);
  auto b = generate_graphs(cfg, 50);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(canonical_key(a[i]) == canonical_key(b[i]));
  }

  SUBCASE("different seeds differ somewhere") {
    cfg.seed = 8;
    auto c = generate_graphs(cfg, 50);
    bool all_equal = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (canonical_key(a[i]) != canonical_key(c[i])) {
        all_equal = false;
        break;
      }
    }
    CHECK_FALSE(all_equal);
  }
}

TEST_CASE("cycle_free_only generates acyclic graphs") {
  GeneratorConfig cfg;
  cfg.max_vertices = 6;
  cfg.max_internal_edges = 8;
  cfg.cycle_free_only = true;
  cfg.seed = 99;
  for (const auto& g : generate_graphs(cfg, 200)) {
    CHECK_FALSE(find_directed_cycle(g).has_value());
  }
}

TEST_CASE("max_vertices zero yields empty graphs") {
  GeneratorConfig cfg;
  cfg.max_vertices = 0;
  cfg.seed = 1;
  for (const auto& g : generate_graphs(cfg, 5)) {
    CHECK(g.empty());
  }
}

TEST_CASE("generator validates its config") {
  GeneratorConfig cfg;
  cfg.external_leg_probability = Rational(3, 2);
  CHECK_THROWS_AS(generate_graphs(cfg, 1), GraphError);
  cfg.external_leg_probability = Rational(1, 2);
  cfg.edge_type_count = 0;
  CHECK_THROWS_AS(generate_graphs(cfg, 1), GraphError);
}

TEST_CASE("exhaustive corpus is iso-deduplicated and sorted") {
  auto corpus = exhaustive_graphs({.max_vertices = 3, .max_internal_edges = 2});
  std::set<CanonicalKey> keys;
  for (const auto& g : corpus) keys.insert(canonical_key(g));
  CHECK(keys.size() == corpus.size());

  SUBCASE("connected_only and cycle_free_only filter") {
    auto connected = exhaustive_graphs({.max_vertices = 3,
                                        .max_internal_edges = 2,
                                        .cycle_free_only = true,
                                        .connected_only = true});
    for (const auto& g : connected) {
      CHECK(is_connected(g));
      CHECK(is_cycle_free(g));
    }
  }

  SUBCASE("the small corpus has the expected size") {
    auto tiny = exhaustive_graphs({.max_vertices = 2, .max_internal_edges = 2});
    // hand count: n=0: {};  n=1: {}, {loop}, {loop,loop};
    // n=2 up to swapping the vertices: {}, {01}, {00}, {01,01}, {01,10},
    // {00,00}, {00,11}, {00,01}, {00,10} — the last two differ because the
    // loop sits at the source resp. the target of the edge
    CHECK(tiny.size() == 13);
  }
}

TEST_CASE("law registry is complete") {
  const auto& registry = law_registry();
  std::set<std::string> registered;
  for (const auto& [name, fn] : registry) {
    (void)fn;
    registered.insert(name);
  }
  std::set<std::string> expected(required_laws().begin(), required_laws().end());
  for (const auto& name : experimental_laws()) expected.insert(name);

  // diff both directions so the message names the offender
  for (const auto& name : expected) {
    CAPTURE(name);
    CHECK(registered.count(name) == 1);
  }
  for (const auto& name : registered) {
    CAPTURE(name);
    CHECK(expected.count(name) == 1);
  }
}

TEST_CASE("run_law rejects unknown names") {
  CHECK_THROWS_AS(run_law("no-such-law", {}, {}), GraphError);
  try {
    run_law("no-such-law", {}, {});
  } catch (const GraphError& e) {
    CHECK(e.code() == errc::unknown_law);
  }
}

TEST_CASE("golden suite passes") {
  auto report = golden_suite();
  CHECK(report.passed());
  CHECK(report.instances_run == 10);
  CHECK(report.law == "golden");
}

TEST_CASE("failure witnesses replay through the parser") {
  // run a law that must fail by feeding a doctored comparison: use the
  // canonical-separates law on a corpus of two isomorphic graphs and check
  // the report shape instead (it passes), then force a failure via a
  // deliberately wrong law invocation is not possible from outside, so
  // exercise the witness path through a failing oracle comparison:
  auto corpus = exhaustive_graphs({.max_vertices = 2, .max_internal_edges = 2});
  auto report = run_law("onepi-oracle", corpus, {});
  CHECK(report.passed());
  CHECK(report.instances_run == corpus.size());

  // reports carry replayable DSL for failures; simulate one directly
  CheckReport fake;
  fake.law = "demo";
  fake.failures.push_back({emit_dsl(triangle(), "witness"), "x", "y"});
  auto doc = parse_document(fake.failures[0].input_dsl);
  CHECK(canonical_key(doc.graph) == canonical_key(triangle()));
}

TEST_CASE("laws pass on a small mixed corpus") {
  auto corpus = exhaustive_graphs({.max_vertices = 3, .max_internal_edges = 3});
  GeneratorConfig gen;
  gen.max_vertices = 4;
  gen.max_internal_edges = 4;
  gen.edge_type_count = 2;
  gen.external_leg_probability = Rational(1, 4);
  gen.seed = 4242;
  for (auto& g : generate_graphs(gen, 40)) corpus.push_back(std::move(g));

  for (const auto& name : required_laws()) {
    CAPTURE(name);
    auto report = run_law(name, corpus, {});
    CHECK(report.passed());
  }
}

TEST_CASE("module invariants at their documented scale") {
  // exhaustive through 5 vertices (edge bounds keep the families finite)
  auto corpus5 = exhaustive_graphs({.max_vertices = 4, .max_internal_edges = 5});
  for (auto& g :
       exhaustive_graphs({.max_vertices = 5, .max_internal_edges = 4})) {
    if (g.vertex_count() == 5) corpus5.push_back(std::move(g));
  }

  for (const char* law :
       {"cover-bijection", "keep-discard-coherence", "loc1pi-loop0-edgeless",
        "loop-additive", "poset-rejects-cycles", "vertex-type-reversal"}) {
    CAPTURE(law);
    CHECK(run_law(law, corpus5, {}).passed());
  }

  SUBCASE("cycle-free laws reach six vertices") {
    auto corpus6 = corpus5;
    GeneratorConfig gen;
    gen.max_vertices = 6;
    gen.max_internal_edges = 5;
    gen.edge_type_count = 2;
    gen.external_leg_probability = Rational(1, 4);
    gen.cycle_free_only = true;
    gen.seed = 606;
    for (auto& g : generate_graphs(gen, 200)) corpus6.push_back(std::move(g));

    for (const char* law : {"prop1-convex", "cuts-are-ideals"}) {
      CAPTURE(law);
      CHECK(run_law(law, corpus6, {}).passed());
    }
  }
}
