#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hopfgraph/coproduct.hpp"
#include "hopfgraph/dsl.hpp"
#include "hopfgraph/emit.hpp"
#include "hopfgraph/generator.hpp"

namespace hopfgraph {

struct CheckFailure {
  std::string input_dsl;  // offending graph(s), replayable through the CLI
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string law;
  std::size_t instances_run = 0;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
};

// ---------------------------------------------------------------------------
// Fixtures

// The running example: a -> b, b -> c, a -> c, no external legs.
inline OrientedGraph triangle_graph() {
  GraphBuilder b;
  VertexId va = b.add_vertex(), vb = b.add_vertex(), vc = b.add_vertex();
  return b.edge(va, vb).edge(vb, vc).edge(va, vc).build();
}

// Oriented hexagon whose alternating-block partition has convex connected
// blocks yet a cyclic contraction.
inline OrientedGraph hexagon_graph() {
  GraphBuilder b;
  for (int i = 0; i < 6; ++i) b.add_vertex();
  return b.edge(0, 1).edge(2, 1).edge(2, 3).edge(4, 3).edge(4, 5).edge(0, 5).build();
}

inline VertexPartition hexagon_partition() {
  return VertexPartition::of({{1, 2}, {3, 4}, {5, 0}});
}

// ---------------------------------------------------------------------------
// Independent oracles (deliberately different algorithms from the library
// paths they certify)

namespace oracle {

// Brute-force isomorphism by trying every vertex bijection.
inline bool isomorphic(const OrientedGraph& a, const OrientedGraph& b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.internal_count() != b.internal_count() ||
      a.external_count() != b.external_count()) {
    return false;
  }
  const std::size_t n = a.vertex_count();
  if (n > 8) {
    throw GraphError(errc::bad_config,
                     "brute-force isomorphism limited to 8 vertices");
  }
  detail::VertexIndex ixa(a), ixb(b);
  std::vector<std::uint32_t> identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = static_cast<std::uint32_t>(i);
  auto target = detail::encode_with_labels(b, ixb, identity, 0);
  std::vector<std::uint32_t> perm = identity;
  do {
    if (detail::encode_with_labels(a, ixa, perm, 0) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0;
}

namespace detail_o {

inline bool connected_skipping(const OrientedGraph& g, EdgeId skip) {
  const auto& vs = g.vertices();
  if (vs.empty()) return false;
  std::map<VertexId, std::vector<VertexId>> adj;
  for (VertexId v : vs) adj[v];
  for (const auto& e : g.internal_edges()) {
    if (e.id == skip) continue;
    adj[e.source].push_back(e.target);
    adj[e.target].push_back(e.source);
  }
  std::set<VertexId> seen{vs.front()};
  std::vector<VertexId> queue{vs.front()};
  while (!queue.empty()) {
    VertexId u = queue.back();
    queue.pop_back();
    for (VertexId w : adj[u]) {
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen.size() == vs.size();
}

}  // namespace detail_o

// "remains connected when we cut any internal edge", checked literally.
inline bool is_1pi_by_deletion(const OrientedGraph& g) {
  constexpr EdgeId no_skip = static_cast<EdgeId>(-1);
  if (!detail_o::connected_skipping(g, no_skip)) return false;
  for (const auto& e : g.internal_edges()) {
    if (e.is_self_loop()) continue;
    if (!detail_o::connected_skipping(g, e.id)) return false;
  }
  return true;
}

// All set partitions by element insertion, filtered by per-block
// connectivity via union-find.
inline std::vector<VertexPartition> connected_partitions_by_filter(
    const OrientedGraph& g) {
  const auto& vs = g.vertices();
  std::vector<VertexPartition> out;
  std::vector<std::vector<VertexId>> blocks;
  auto block_connected = [&](const std::vector<VertexId>& blk) {
    if (blk.size() <= 1) return true;
    std::map<VertexId, VertexId> parent;
    for (VertexId v : blk) parent[v] = v;
    std::function<VertexId(VertexId)> find = [&](VertexId v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& e : g.internal_edges()) {
      if (parent.count(e.source) && parent.count(e.target)) {
        parent[find(e.source)] = find(e.target);
      }
    }
    VertexId root = find(blk.front());
    for (VertexId v : blk) {
      if (find(v) != root) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == vs.size()) {
      for (const auto& blk : blocks) {
        if (!block_connected(blk)) return;
      }
      out.push_back(VertexPartition::of(blocks));
      return;
    }
    // index-based: deeper recursion grows the vector and may reallocate
    std::size_t nblocks = blocks.size();
    for (std::size_t b = 0; b < nblocks; ++b) {
      blocks[b].push_back(vs[i]);
      self(self, i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({vs[i]});
    self(self, i + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// All down-closed vertex sets of the poset.
inline std::vector<std::vector<VertexId>> order_ideals(
    const ReachabilityPoset& p) {
  const auto& carrier = p.carrier();
  const std::size_t n = carrier.size();
  std::vector<std::vector<VertexId>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<VertexId> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) s.push_back(carrier[i]);
    }
    if (is_down_closed(p, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle

// ---------------------------------------------------------------------------
// Law machinery

namespace law_detail {

constexpr std::size_t kMaxWitnesses = 8;

class Run {
public:
  explicit Run(std::string law) { report_.law = std::move(law); }

  void check(bool ok, const OrientedGraph& witness, std::string expected,
             std::string actual) {
    ++report_.instances_run;
    if (!ok) {
      if (report_.failures.size() < kMaxWitnesses) {
        report_.failures.push_back({emit_dsl(witness, "witness"),
                                    std::move(expected), std::move(actual)});
      } else {
        // keep the report bounded; passed() is already false
        report_.failures.back().actual += " (more failures suppressed)";
      }
    }
  }

  CheckReport take() { return std::move(report_); }

private:
  CheckReport report_;
};

inline OrientedGraph relabel(const OrientedGraph& g,
                             const std::vector<VertexId>& image) {
  detail::VertexIndex ix(g);
  std::vector<VertexId> vs;
  for (std::size_t i = 0; i < ix.size(); ++i) vs.push_back(image[i]);
  std::vector<InternalEdge> internal;
  for (auto e : g.internal_edges()) {
    e.source = image[ix.index(e.source)];
    e.target = image[ix.index(e.target)];
    internal.push_back(e);
  }
  std::vector<ExternalEdge> external;
  for (auto x : g.external_edges()) {
    x.vertex = image[ix.index(x.vertex)];
    external.push_back(x);
  }
  return OrientedGraph(std::move(vs), std::move(internal), std::move(external));
}

inline OrientedGraph reverse_orientations(const OrientedGraph& g) {
  std::vector<InternalEdge> internal;
  for (auto e : g.internal_edges()) {
    std::swap(e.source, e.target);
    internal.push_back(e);
  }
  std::vector<ExternalEdge> external;
  for (auto x : g.external_edges()) {
    x.direction = x.direction == LegDirection::Incoming
                      ? LegDirection::Outgoing
                      : LegDirection::Incoming;
    external.push_back(x);
  }
  return OrientedGraph(g.vertices(), std::move(internal), std::move(external));
}

}  // namespace law_detail

inline bool has_self_loop(const OrientedGraph& g) {
  for (const auto& e : g.internal_edges()) {
    if (e.is_self_loop()) return true;
  }
  return false;
}

// The bialgebras are spanned by their own graph classes, so cfg-dependent
// laws run on the subset of the corpus that lies in the algebra:
//  - graphs with self-loops are out everywhere (every covering subgraph of
//    such a graph contains the loop, so no covering subgraph is edge-free
//    and no counit can satisfy the left counit axiom);
//  - the K-algebras (Discard policy) deal with graphs having only internal
//    edges, so external legs are out there (otherwise (id (x) eps)Delta
//    returns the graph with its legs stripped);
//  - the 1PI / cycle-free variants are spanned by locally 1PI resp.
//    cycle-free graphs.
inline std::vector<OrientedGraph> corpus_for_config(
    const std::vector<OrientedGraph>& corpus, const CoalgebraConfig& cfg) {
  std::vector<OrientedGraph> out;
  for (const auto& g : corpus) {
    if (has_self_loop(g)) continue;
    if (cfg.externals == ExternalPolicy::Discard && g.external_count() > 0) {
      continue;
    }
    if ((cfg.variant == CoverVariant::Locally1PI ||
         cfg.variant == CoverVariant::PosetCompatibleLocally1PI) &&
        !is_locally_1pi(g)) {
      continue;
    }
    if (variant_needs_cycle_free(cfg.variant) && !is_cycle_free(g)) continue;
    out.push_back(g);
  }
  return out;
}

// Domain of the admissible-cut coalgebra for a policy: cycle-free, and
// legless when externals are discarded.
inline std::vector<OrientedGraph> cut_domain(
    const std::vector<OrientedGraph>& corpus, ExternalPolicy policy) {
  std::vector<OrientedGraph> out;
  for (const auto& g : corpus) {
    if (!is_cycle_free(g)) continue;
    if (policy == ExternalPolicy::Discard && g.external_count() > 0) continue;
    out.push_back(g);
  }
  return out;
}

using LawFn = std::function<CheckReport(const std::vector<OrientedGraph>&,
                                        const CoalgebraConfig&)>;

const std::map<std::string, LawFn>& law_registry();

// Stable names for every invariant in the module contracts; the registry
// must cover exactly these plus the experimental ones.
inline const std::vector<std::string>& required_laws() {
  static const std::vector<std::string> laws = {
      "canonical-relabel",
      "canonical-separates",
      "onepi-oracle",
      "loop-additive",
      "loc1pi-loop0-edgeless",
      "poset-rejects-cycles",
      "vertex-type-reversal",
      "shrink-transitive",
      "cover-bijection",
      "prop1-convex",
      "prop1-converse",
      "cuts-are-ideals",
      "cover-count-oracle",
      "keep-discard-coherence",
      "subgraph-transitivity",
      "algebra-laws",
      "no-zero-coeffs",
      "from-graph-multiplicative",
      "hopf-projection-algebra-map",
      "coassoc",
      "cut-coassoc",
      "counit-axioms",
      "cut-counit-axioms",
      "coproduct-algebra-morphism",
      "cut-algebra-morphism",
      "grouplike-residues",
      "grading-compat",
      "cut-grading",
      "antipode-convolution",
      "antipode-involutive",
      "cut-antipode-convolution",
      "cut-antipode-involutive",
      "comodule",
      "quotient-consistency",
  };
  return laws;
}

// Checks whose failure is informative rather than a defect.
inline const std::vector<std::string>& experimental_laws() {
  static const std::vector<std::string> laws = {"comodule-psi-experimental"};
  return laws;
}

inline CheckReport run_law(const std::string& name,
                           const std::vector<OrientedGraph>& corpus,
                           const CoalgebraConfig& cfg) {
  const auto& registry = law_registry();
  auto it = registry.find(name);
  if (it == registry.end()) {
    throw GraphError(errc::unknown_law, "unknown law '" + name + "'");
  }
  return it->second(corpus, cfg);
}

// ---------------------------------------------------------------------------
// Law implementations

namespace law_detail {

inline CheckReport canonical_relabel(const std::vector<OrientedGraph>& corpus,
                                     const CoalgebraConfig&) {
  Run run("canonical-relabel");
  hopfgraph::detail::Rng rng(0xC0FFEE);
  for (const auto& g : corpus) {
    CanonicalKey key = canonical_key(g);
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<VertexId> image(g.vertex_count());
      for (std::size_t i = 0; i < image.size(); ++i) {
        image[i] = static_cast<VertexId>(i + 5);
      }
      rng.shuffle(image);
      OrientedGraph h = relabel(g, image);
      run.check(canonical_key(h) == key, g, "identical canonical keys",
                "keys differ after relabeling");
    }
  }
  return run.take();
}

inline CheckReport canonical_separates(const std::vector<OrientedGraph>& corpus,
                                       const CoalgebraConfig&) {
  Run run("canonical-separates");
  for (std::size_t i = 0; i + 1 < corpus.size(); ++i) {
    const auto& a = corpus[i];
    const auto& b = corpus[i + 1];
    if (a.vertex_count() > 7 || b.vertex_count() > 7) continue;
    bool keys_equal = canonical_key(a) == canonical_key(b);
    bool iso = oracle::isomorphic(a, b);
    run.check(keys_equal == iso, disjoint_union(a, b),
              iso ? "equal keys (isomorphic pair)"
                  : "distinct keys (non-isomorphic pair)",
              keys_equal ? "keys equal" : "keys distinct");
  }
  return run.take();
}

inline CheckReport onepi_oracle(const std::vector<OrientedGraph>& corpus,
                                const CoalgebraConfig&) {
  Run run("onepi-oracle");
  for (const auto& g : corpus) {
    bool fast = is_1pi(g);
    bool slow = oracle::is_1pi_by_deletion(g);
    run.check(fast == slow, g, slow ? "1PI" : "not 1PI",
              fast ? "1PI" : "not 1PI");
  }
  return run.take();
}

inline CheckReport loop_additive(const std::vector<OrientedGraph>& corpus,
                                 const CoalgebraConfig&) {
  Run run("loop-additive");
  for (std::size_t i = 0; i + 1 < corpus.size(); ++i) {
    const auto& a = corpus[i];
    const auto& b = corpus[i + 1];
    std::size_t lhs = loop_number(disjoint_union(a, b));
    std::size_t rhs = loop_number(a) + loop_number(b);
    run.check(lhs == rhs, disjoint_union(a, b), std::to_string(rhs),
              std::to_string(lhs));
  }
  return run.take();
}

inline CheckReport loc1pi_loop0(const std::vector<OrientedGraph>& corpus,
                                const CoalgebraConfig&) {
  Run run("loc1pi-loop0-edgeless");
  for (const auto& g : corpus) {
    if (!is_locally_1pi(g) || loop_number(g) != 0) continue;
    run.check(g.internal_count() == 0, g, "no internal edges",
              std::to_string(g.internal_count()) + " internal edges");
  }
  return run.take();
}

inline CheckReport poset_rejects_cycles(const std::vector<OrientedGraph>& corpus,
                                        const CoalgebraConfig&) {
  Run run("poset-rejects-cycles");
  for (const auto& g : corpus) {
    bool has_cycle = find_directed_cycle(g).has_value();
    bool rejected = false;
    try {
      reachability_order(g);
    } catch (const GraphError& e) {
      rejected = e.code() == errc::not_cycle_free;
    }
    run.check(has_cycle == rejected, g,
              has_cycle ? "NotCycleFree" : "a poset",
              rejected ? "NotCycleFree" : "a poset");
  }
  return run.take();
}

inline CheckReport vertex_type_reversal(const std::vector<OrientedGraph>& corpus,
                                        const CoalgebraConfig&) {
  Run run("vertex-type-reversal");
  for (const auto& g : corpus) {
    OrientedGraph r = reverse_orientations(g);
    bool ok = true;
    for (VertexId v : g.vertices()) {
      if (vertex_type(g, v) != vertex_type(r, v)) {
        ok = false;
        break;
      }
    }
    run.check(ok, g, "types invariant under reversal", "types changed");
  }
  return run.take();
}

inline CheckReport shrink_transitive(const std::vector<OrientedGraph>& corpus,
                                     const CoalgebraConfig&) {
  Run run("shrink-transitive");
  for (const auto& g : corpus) {
    auto partitions = enumerate_covering_partitions(g, CoverVariant::Full);
    for (const auto& fine : partitions) {
      for (const auto& coarse : partitions) {
        if (!refines(fine, coarse)) continue;
        OrientedGraph direct = contract(g, coarse);
        OrientedGraph staged =
            contract(contract(g, fine), quotient_partition(coarse, fine));
        run.check(canonical_key(direct) == canonical_key(staged), g,
                  "contract(g, coarse) iso to staged contraction",
                  "contractions differ");
      }
    }
  }
  return run.take();
}

inline CheckReport cover_bijection(const std::vector<OrientedGraph>& corpus,
                                   const CoalgebraConfig&) {
  Run run("cover-bijection");
  for (const auto& g : corpus) {
    auto partitions = enumerate_covering_partitions(g, CoverVariant::Full);
    for (const auto& fine : partitions) {
      std::set<VertexPartition> image;
      std::size_t coarser = 0;
      for (const auto& gamma : partitions) {
        if (!refines(fine, gamma)) continue;
        ++coarser;
        image.insert(quotient_partition(gamma, fine));
      }
      auto target = enumerate_covering_partitions(contract(g, fine),
                                                  CoverVariant::Full);
      std::set<VertexPartition> target_set(target.begin(), target.end());
      run.check(image.size() == coarser && image == target_set, g,
                "bijection onto covering partitions of the contraction",
                "map is not a bijection");
    }
  }
  return run.take();
}

inline CheckReport prop1_convex(const std::vector<OrientedGraph>& corpus,
                                const CoalgebraConfig&) {
  Run run("prop1-convex");
  for (const auto& g : cut_domain(corpus, ExternalPolicy::Keep)) {
    ReachabilityPoset poset = reachability_order(g);
    for (const auto& p :
         enumerate_covering_partitions(g, CoverVariant::PosetCompatible)) {
      bool ok = true;
      for (const auto& blk : p.blocks) {
        if (!is_convex(poset, blk)) {
          ok = false;
          break;
        }
      }
      run.check(ok, g, "all blocks convex", "non-convex block");
    }
  }
  return run.take();
}

inline CheckReport prop1_converse(const std::vector<OrientedGraph>&,
                                  const CoalgebraConfig&) {
  Run run("prop1-converse");
  OrientedGraph h6 = hexagon_graph();
  VertexPartition p = hexagon_partition();
  bool connected_blocks = true;
  try {
    validate_covering(h6, p);
  } catch (const GraphError&) {
    connected_blocks = false;
  }
  ReachabilityPoset poset = reachability_order(h6);
  bool convex = true;
  for (const auto& blk : p.blocks) convex = convex && is_convex(poset, blk);
  bool compatible = is_poset_compatible(h6, p);
  auto cycle = find_directed_cycle(contract(h6, p));
  bool confirmed = connected_blocks && convex && !compatible && cycle &&
                   cycle->size() == 3;
  run.check(confirmed, h6,
            "convex connected blocks with a directed 3-cycle contraction",
            compatible ? "partition is poset-compatible"
                       : "unexpected hexagon behaviour");
  return run.take();
}

inline CheckReport cuts_are_ideals(const std::vector<OrientedGraph>& corpus,
                                   const CoalgebraConfig&) {
  Run run("cuts-are-ideals");
  for (const auto& g : cut_domain(corpus, ExternalPolicy::Keep)) {
    auto cuts = enumerate_admissible_cuts(g);
    std::vector<std::vector<VertexId>> lower_parts;
    for (const auto& c : cuts) lower_parts.push_back(c.lower);
    std::sort(lower_parts.begin(), lower_parts.end());
    auto ideals = oracle::order_ideals(reachability_order(g));
    run.check(lower_parts == ideals, g,
              std::to_string(ideals.size()) + " order ideals",
              std::to_string(lower_parts.size()) + " admissible cuts");
  }
  return run.take();
}

inline CheckReport cover_count_oracle(const std::vector<OrientedGraph>& corpus,
                                      const CoalgebraConfig&) {
  Run run("cover-count-oracle");
  for (const auto& g : corpus) {
    auto fast = enumerate_covering_partitions(g, CoverVariant::Full);
    auto slow = oracle::connected_partitions_by_filter(g);
    run.check(fast == slow, g, std::to_string(slow.size()) + " partitions",
              std::to_string(fast.size()) + " partitions");
  }
  return run.take();
}

inline CheckReport keep_discard_coherence(const std::vector<OrientedGraph>& corpus,
                                          const CoalgebraConfig&) {
  Run run("keep-discard-coherence");
  for (const auto& g : corpus) {
    if (g.vertex_count() > 5) continue;
    const auto& vs = g.vertices();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vs.size());
         ++mask) {
      std::vector<VertexId> subset;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (mask & (std::uint64_t{1} << i)) subset.push_back(vs[i]);
      }
      OrientedGraph kept = induced_subgraph(g, subset, ExternalPolicy::Keep);
      OrientedGraph bare = induced_subgraph(g, subset, ExternalPolicy::Discard);
      run.check(canonical_key(strip_external(kept)) == canonical_key(bare), g,
                "stripped Keep subgraph equals Discard subgraph",
                "subgraphs differ");
    }
  }
  return run.take();
}

inline CheckReport subgraph_transitivity(const std::vector<OrientedGraph>& corpus,
                                         const CoalgebraConfig&) {
  Run run("subgraph-transitivity");
  for (const auto& g : corpus) {
    if (g.vertex_count() > 5) continue;
    const auto& vs = g.vertices();
    for (std::uint64_t outer = 0; outer < (std::uint64_t{1} << vs.size());
         ++outer) {
      std::vector<VertexId> p;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (outer & (std::uint64_t{1} << i)) p.push_back(vs[i]);
      }
      // iterate subsets of the outer mask
      for (std::uint64_t inner = outer;; inner = (inner - 1) & outer) {
        std::vector<VertexId> q;
        for (std::size_t i = 0; i < vs.size(); ++i) {
          if (inner & (std::uint64_t{1} << i)) q.push_back(vs[i]);
        }
        for (ExternalPolicy pol : {ExternalPolicy::Keep, ExternalPolicy::Discard}) {
          run.check(subgraph_transitivity_check(g, p, q, pol), g,
                    "Gamma(P)(Q) iso Gamma(Q)", "subgraphs differ");
        }
        if (inner == 0) break;
      }
    }
  }
  return run.take();
}

inline CheckReport algebra_laws(const std::vector<OrientedGraph>& corpus,
                                const CoalgebraConfig&) {
  Run run("algebra-laws");
  for (std::size_t i = 0; i + 2 < corpus.size(); i += 3) {
    AlgebraElement x = from_graph(corpus[i], AlgebraMode::Bialgebra);
    AlgebraElement y = from_graph(corpus[i + 1], AlgebraMode::Bialgebra);
    AlgebraElement z = from_graph(corpus[i + 2], AlgebraMode::Bialgebra);
    AlgebraElement mixed = x + Rational(2, 3) * y;
    bool ok = (x * y) * z == x * (y * z) && x * y == y * x &&
              AlgebraElement::unit() * mixed == mixed &&
              mixed - mixed == AlgebraElement::zero() &&
              (x + y) * z == x * z + y * z;
    run.check(ok, corpus[i], "ring laws hold", "ring law violated");
  }
  return run.take();
}

inline CheckReport no_zero_coeffs(const std::vector<OrientedGraph>& corpus,
                                  const CoalgebraConfig&) {
  Run run("no-zero-coeffs");
  auto audit = [](const AlgebraElement& e) {
    for (const auto& [m, c] : e.terms()) {
      if (c == 0) return false;
      if (!std::is_sorted(m.factors.begin(), m.factors.end())) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i + 1 < corpus.size(); ++i) {
    AlgebraElement x = from_graph(corpus[i], AlgebraMode::Bialgebra);
    AlgebraElement y = from_graph(corpus[i + 1], AlgebraMode::Bialgebra);
    bool ok = audit(x - x) && audit((x + y) - y) && audit(Rational(0) * x) &&
              audit(x * y - y * x);
    run.check(ok, corpus[i], "normalized storage", "zero coefficient stored");
  }
  return run.take();
}

inline CheckReport from_graph_multiplicative(
    const std::vector<OrientedGraph>& corpus, const CoalgebraConfig&) {
  Run run("from-graph-multiplicative");
  for (std::size_t i = 0; i + 1 < corpus.size(); ++i) {
    for (AlgebraMode mode : {AlgebraMode::Bialgebra, AlgebraMode::Hopf}) {
      AlgebraElement joint =
          from_graph(disjoint_union(corpus[i], corpus[i + 1]), mode);
      AlgebraElement split =
          from_graph(corpus[i], mode) * from_graph(corpus[i + 1], mode);
      run.check(joint == split, disjoint_union(corpus[i], corpus[i + 1]),
                emit(split, EmitFormat::Text), emit(joint, EmitFormat::Text));
    }
  }
  return run.take();
}

inline CheckReport hopf_projection(const std::vector<OrientedGraph>& corpus,
                                   const CoalgebraConfig&) {
  Run run("hopf-projection-algebra-map");
  for (std::size_t i = 0; i + 1 < corpus.size(); ++i) {
    AlgebraElement x = from_graph(corpus[i], AlgebraMode::Bialgebra);
    AlgebraElement y = from_graph(corpus[i + 1], AlgebraMode::Bialgebra);
    bool ok = hopf_project(x) == from_graph(corpus[i], AlgebraMode::Hopf) &&
              hopf_project(x * y) == hopf_project(x) * hopf_project(y);
    run.check(ok, corpus[i], "projection commutes with multiplication",
              "projection mismatch");
  }
  return run.take();
}

inline CheckReport coassoc(const std::vector<OrientedGraph>& corpus,
                           const CoalgebraConfig& cfg) {
  Run run("coassoc");
  auto delta = [&cfg](const AlgebraElement& x) { return coproduct(x, cfg); };
  for (const auto& g : corpus_for_config(corpus, cfg)) {
    AlgebraElement x = from_graph(g, cfg.mode);
    Tensor2 t = coproduct(x, cfg);
    Tensor3 left = tensor_map_slotwise(t, 0, delta);
    Tensor3 right = tensor_map_slotwise(t, 1, delta);
    run.check(left == right, g, "equal triple coproducts",
              "triple coproducts differ");
  }
  return run.take();
}

// direct triple sum over admissible triples, for the cut coassociativity
inline Tensor3 cut_triple_sum(const OrientedGraph& g, ExternalPolicy policy) {
  ReachabilityPoset poset = reachability_order(g);
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  Tensor3 out;
  std::vector<std::uint8_t> slot(n, 0);
  auto admissible_pair = [&](const std::vector<VertexId>& hi,
                             const std::vector<VertexId>& lo) {
    for (VertexId a : hi) {
      for (VertexId b : lo) {
        if (poset.less(a, b)) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      std::vector<VertexId> v1, v2, v3;
      for (std::size_t k = 0; k < n; ++k) {
        (slot[k] == 0 ? v1 : slot[k] == 1 ? v2 : v3).push_back(vs[k]);
      }
      if (!admissible_pair(v1, v2) || !admissible_pair(v2, v3) ||
          !admissible_pair(v1, v3)) {
        return;
      }
      out = out + tensor_combine(
                      from_graph(induced_subgraph(g, v1, policy),
                                 AlgebraMode::Bialgebra),
                      from_graph(induced_subgraph(g, v2, policy),
                                 AlgebraMode::Bialgebra),
                      from_graph(induced_subgraph(g, v3, policy),
                                 AlgebraMode::Bialgebra));
      return;
    }
    for (std::uint8_t s = 0; s < 3; ++s) {
      slot[i] = s;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

inline CheckReport cut_coassoc(const std::vector<OrientedGraph>& corpus,
                               const CoalgebraConfig& cfg) {
  Run run("cut-coassoc");
  ExternalPolicy policy = cfg.externals;
  auto delta = [policy](const AlgebraElement& x) {
    return cut_coproduct(x, policy);
  };
  for (const auto& g : cut_domain(corpus, policy)) {
    AlgebraElement x = from_graph(g, AlgebraMode::Bialgebra);
    Tensor2 t = cut_coproduct(x, policy);
    Tensor3 left = tensor_map_slotwise(t, 0, delta);
    Tensor3 right = tensor_map_slotwise(t, 1, delta);
    bool ok = left == right;
    if (ok && g.vertex_count() <= 6) {
      ok = left == cut_triple_sum(g, policy);
    }
    run.check(ok, g, "coassociative and equal to the triple sum",
              "cut coproduct not coassociative");
  }
  return run.take();
}

inline CheckReport counit_axioms(const std::vector<OrientedGraph>& corpus,
                                 const CoalgebraConfig& cfg) {
  Run run("counit-axioms");
  auto eps = [&cfg](const AlgebraElement& x) { return counit(x, cfg); };
  for (const auto& g : corpus_for_config(corpus, cfg)) {
    AlgebraElement x = from_graph(g, cfg.mode);
    Tensor2 t = coproduct(x, cfg);
    bool ok = contract_slot(t, 0, eps) == x && contract_slot(t, 1, eps) == x;
    run.check(ok, g, "counit axioms hold", "counit axiom violated");
  }
  return run.take();
}

inline CheckReport cut_counit_axioms(const std::vector<OrientedGraph>& corpus,
                                     const CoalgebraConfig& cfg) {
  Run run("cut-counit-axioms");
  auto eps = [](const AlgebraElement& x) { return cut_counit(x); };
  for (const auto& g : cut_domain(corpus, cfg.externals)) {
    AlgebraElement x = from_graph(g, AlgebraMode::Bialgebra);
    Tensor2 t = cut_coproduct(x, cfg.externals);
    bool ok = contract_slot(t, 0, eps) == x && contract_slot(t, 1, eps) == x;
    run.check(ok, g, "counit axioms hold", "counit axiom violated");
  }
  return run.take();
}

inline CheckReport coproduct_algebra_morphism(
    const std::vector<OrientedGraph>& corpus, const CoalgebraConfig& cfg) {
  Run run("coproduct-algebra-morphism");
  auto domain = corpus_for_config(corpus, cfg);
  for (std::size_t i = 0; i + 1 < domain.size(); ++i) {
    OrientedGraph joint = disjoint_union(domain[i], domain[i + 1]);
    Tensor2 direct = coproduct(joint, cfg);  // the partition sum itself
    Tensor2 split = coproduct(domain[i], cfg) * coproduct(domain[i + 1], cfg);
    AlgebraElement x = from_graph(domain[i], cfg.mode);
    AlgebraElement y = from_graph(domain[i + 1], cfg.mode);
    bool ok = direct == split && coproduct(x * y, cfg) == split;
    run.check(ok, joint, "coproduct is multiplicative",
              "coproduct of a product mismatches");
  }
  return run.take();
}

inline CheckReport cut_algebra_morphism(const std::vector<OrientedGraph>& corpus,
                                        const CoalgebraConfig& cfg) {
  Run run("cut-algebra-morphism");
  auto domain = cut_domain(corpus, cfg.externals);
  for (std::size_t i = 0; i + 1 < domain.size(); ++i) {
    OrientedGraph joint = disjoint_union(domain[i], domain[i + 1]);
    Tensor2 direct = cut_coproduct(joint, cfg.externals);
    Tensor2 split = cut_coproduct(domain[i], cfg.externals) *
                    cut_coproduct(domain[i + 1], cfg.externals);
    run.check(direct == split, joint, "cut coproduct is multiplicative",
              "cut coproduct of a product mismatches");
  }
  return run.take();
}

inline CheckReport grouplike_residues(const std::vector<OrientedGraph>& corpus,
                                      const CoalgebraConfig& cfg) {
  Run run("grouplike-residues");
  CoalgebraConfig bi{cfg.variant, AlgebraMode::Bialgebra, cfg.externals};
  for (const auto& g : corpus_for_config(corpus, bi)) {
    OrientedGraph r = residue(g);
    AlgebraElement x = from_graph(r, AlgebraMode::Bialgebra);
    Tensor2 expected = tensor_combine(x, x);
    Tensor2 actual = coproduct(r, bi);
    run.check(actual == expected, r, "Delta(R) = R (x) R",
              "residue is not grouplike");
  }
  return run.take();
}

inline CheckReport grading_compat(const std::vector<OrientedGraph>& corpus,
                                  const CoalgebraConfig& cfg) {
  Run run("grading-compat");
  for (const auto& g : corpus_for_config(corpus, cfg)) {
    Tensor2 t = coproduct(g, cfg);
    std::size_t edges = g.internal_count();
    std::size_t loops = loop_number(g);
    bool ok = true;
    for (const auto& [key, c] : t.terms()) {
      (void)c;
      if (degree(key[0], Grading::InternalEdges) +
                  degree(key[1], Grading::InternalEdges) !=
              edges ||
          degree(key[0], Grading::LoopNumber) +
                  degree(key[1], Grading::LoopNumber) !=
              loops) {
        ok = false;
        break;
      }
    }
    run.check(ok, g, "term degrees sum to the graph degree",
              "grading violated");
  }
  return run.take();
}

inline CheckReport cut_grading(const std::vector<OrientedGraph>& corpus,
                               const CoalgebraConfig& cfg) {
  Run run("cut-grading");
  for (const auto& g : cut_domain(corpus, cfg.externals)) {
    Tensor2 t = cut_coproduct(g, cfg.externals);
    std::size_t vertices = g.vertex_count();
    bool ok = true;
    for (const auto& [key, c] : t.terms()) {
      (void)c;
      if (degree(key[0], Grading::VertexCount) +
              degree(key[1], Grading::VertexCount) !=
          vertices) {
        ok = false;
        break;
      }
    }
    run.check(ok, g, "vertex counts sum per term", "cut grading violated");
  }
  return run.take();
}

inline CheckReport antipode_convolution(const std::vector<OrientedGraph>& corpus,
                                        const CoalgebraConfig& cfg) {
  Run run("antipode-convolution");
  CoalgebraConfig hopf{cfg.variant, AlgebraMode::Hopf, cfg.externals};
  auto s = [&hopf](const AlgebraElement& x) { return antipode(x, hopf); };
  for (const auto& g : corpus_for_config(corpus, hopf)) {
    AlgebraElement x = from_graph(g, AlgebraMode::Hopf);
    Tensor2 t = coproduct(x, hopf);
    AlgebraElement expected = counit(x, hopf) * AlgebraElement::unit();
    bool ok = multiply_slots(tensor_map_slotwise(t, 0, s)) == expected &&
              multiply_slots(tensor_map_slotwise(t, 1, s)) == expected;
    run.check(ok, g, "m(S (x) id)Delta = unit . counit",
              "antipode convolution identity fails");
  }
  return run.take();
}

inline CheckReport antipode_involutive(const std::vector<OrientedGraph>& corpus,
                                       const CoalgebraConfig& cfg) {
  Run run("antipode-involutive");
  CoalgebraConfig hopf{cfg.variant, AlgebraMode::Hopf, cfg.externals};
  for (const auto& g : corpus_for_config(corpus, hopf)) {
    AlgebraElement x = from_graph(g, AlgebraMode::Hopf);
    run.check(antipode(antipode(x, hopf), hopf) == x, g, "S(S(x)) = x",
              "antipode is not involutive");
  }
  return run.take();
}

inline CheckReport cut_antipode_convolution(
    const std::vector<OrientedGraph>& corpus, const CoalgebraConfig& cfg) {
  Run run("cut-antipode-convolution");
  ExternalPolicy policy = cfg.externals;
  auto s = [policy](const AlgebraElement& x) {
    return cut_antipode(x, policy);
  };
  for (const auto& g : cut_domain(corpus, policy)) {
    AlgebraElement x = from_graph(g, AlgebraMode::Bialgebra);
    Tensor2 t = cut_coproduct(x, policy);
    AlgebraElement expected = cut_counit(x) * AlgebraElement::unit();
    bool ok = multiply_slots(tensor_map_slotwise(t, 0, s)) == expected &&
              multiply_slots(tensor_map_slotwise(t, 1, s)) == expected;
    run.check(ok, g, "m(S (x) id)Delta_c = unit . counit",
              "cut antipode convolution identity fails");
  }
  return run.take();
}

inline CheckReport cut_antipode_involutive(
    const std::vector<OrientedGraph>& corpus, const CoalgebraConfig& cfg) {
  Run run("cut-antipode-involutive");
  for (const auto& g : cut_domain(corpus, cfg.externals)) {
    AlgebraElement x = from_graph(g, AlgebraMode::Bialgebra);
    run.check(cut_antipode(cut_antipode(x, cfg.externals), cfg.externals) == x,
              g, "S(S(x)) = x", "cut antipode is not involutive");
  }
  return run.take();
}

inline CheckReport comodule(const std::vector<OrientedGraph>& corpus,
                            const CoalgebraConfig& cfg) {
  Run run("comodule");
  ExternalPolicy policy = cfg.externals;
  auto phi = [policy](const AlgebraElement& x) {
    return coaction(x, CoactionSide::Left, policy);
  };
  auto delta_c = [policy](const AlgebraElement& x) {
    return cut_coproduct(x, policy);
  };
  for (const auto& g : cut_domain(corpus, policy)) {
    AlgebraElement x = from_graph(g, AlgebraMode::Bialgebra);
    Tensor3 lhs = tensor_map_slotwise(coaction(x, CoactionSide::Left, policy),
                                      1, delta_c);
    Tensor3 rhs = m13(tensor_map_slotwise(
        tensor_map_slotwise(cut_coproduct(x, policy), 0, phi), 2, phi));
    run.check(lhs == rhs, g, "comodule-coalgebra diagram commutes",
              "diagram does not commute");
  }
  return run.take();
}

// mirrored identity for the right coaction; informational only
inline CheckReport comodule_psi(const std::vector<OrientedGraph>& corpus,
                                const CoalgebraConfig& cfg) {
  Run run("comodule-psi-experimental");
  ExternalPolicy policy = cfg.externals;
  auto psi = [policy](const AlgebraElement& x) {
    return coaction(x, CoactionSide::Right, policy);
  };
  auto delta_c = [policy](const AlgebraElement& x) {
    return cut_coproduct(x, policy);
  };
  auto m24 = [](const Tensor4& t) {
    Tensor3 out;
    for (const auto& [k, c] : t.terms()) {
      out.add_term({k[0], k[2], k[1] * k[3]}, c);
    }
    return out;
  };
  for (const auto& g : cut_domain(corpus, policy)) {
    AlgebraElement x = from_graph(g, AlgebraMode::Bialgebra);
    Tensor3 lhs = tensor_map_slotwise(coaction(x, CoactionSide::Right, policy),
                                      0, delta_c);
    Tensor3 rhs = m24(tensor_map_slotwise(
        tensor_map_slotwise(cut_coproduct(x, policy), 0, psi), 2, psi));
    run.check(lhs == rhs, g, "mirrored diagram commutes",
              "mirrored diagram does not commute");
  }
  return run.take();
}

inline CheckReport quotient_consistency(const std::vector<OrientedGraph>& corpus,
                                        const CoalgebraConfig& cfg) {
  Run run("quotient-consistency");
  CoalgebraConfig bi{cfg.variant, AlgebraMode::Bialgebra, cfg.externals};
  CoalgebraConfig hopf{cfg.variant, AlgebraMode::Hopf, cfg.externals};
  auto project = [](const AlgebraElement& x) { return hopf_project(x); };
  for (const auto& g : corpus_for_config(corpus, bi)) {
    Tensor2 projected = tensor_map_slotwise(
        tensor_map_slotwise(coproduct(g, bi), 0, project), 1, project);
    run.check(projected == coproduct(g, hopf), g,
              "Hopf coproduct = projected bialgebra coproduct",
              "quotient mismatch");
  }
  return run.take();
}

}  // namespace law_detail

inline const std::map<std::string, LawFn>& law_registry() {
  static const std::map<std::string, LawFn> registry = {
      {"canonical-relabel", law_detail::canonical_relabel},
      {"canonical-separates", law_detail::canonical_separates},
      {"onepi-oracle", law_detail::onepi_oracle},
      {"loop-additive", law_detail::loop_additive},
      {"loc1pi-loop0-edgeless", law_detail::loc1pi_loop0},
      {"poset-rejects-cycles", law_detail::poset_rejects_cycles},
      {"vertex-type-reversal", law_detail::vertex_type_reversal},
      {"shrink-transitive", law_detail::shrink_transitive},
      {"cover-bijection", law_detail::cover_bijection},
      {"prop1-convex", law_detail::prop1_convex},
      {"prop1-converse", law_detail::prop1_converse},
      {"cuts-are-ideals", law_detail::cuts_are_ideals},
      {"cover-count-oracle", law_detail::cover_count_oracle},
      {"keep-discard-coherence", law_detail::keep_discard_coherence},
      {"subgraph-transitivity", law_detail::subgraph_transitivity},
      {"algebra-laws", law_detail::algebra_laws},
      {"no-zero-coeffs", law_detail::no_zero_coeffs},
      {"from-graph-multiplicative", law_detail::from_graph_multiplicative},
      {"hopf-projection-algebra-map", law_detail::hopf_projection},
      {"coassoc", law_detail::coassoc},
      {"cut-coassoc", law_detail::cut_coassoc},
      {"counit-axioms", law_detail::counit_axioms},
      {"cut-counit-axioms", law_detail::cut_counit_axioms},
      {"coproduct-algebra-morphism", law_detail::coproduct_algebra_morphism},
      {"cut-algebra-morphism", law_detail::cut_algebra_morphism},
      {"grouplike-residues", law_detail::grouplike_residues},
      {"grading-compat", law_detail::grading_compat},
      {"cut-grading", law_detail::cut_grading},
      {"antipode-convolution", law_detail::antipode_convolution},
      {"antipode-involutive", law_detail::antipode_involutive},
      {"cut-antipode-convolution", law_detail::cut_antipode_convolution},
      {"cut-antipode-involutive", law_detail::cut_antipode_involutive},
      {"comodule", law_detail::comodule},
      {"comodule-psi-experimental", law_detail::comodule_psi},
      {"quotient-consistency", law_detail::quotient_consistency},
  };
  return registry;
}

// ---------------------------------------------------------------------------
// Golden suite: the ten displayed triangle coproducts, frozen structurally.

namespace golden_detail {

inline OrientedGraph point() {
  GraphBuilder b;
  b.add_vertex();
  return b.build();
}

inline OrientedGraph source2() {  // vertex with two outgoing legs
  GraphBuilder b;
  VertexId v = b.add_vertex();
  return b.leg_out(v).leg_out(v).build();
}

inline OrientedGraph sink2() {  // vertex with two incoming legs
  GraphBuilder b;
  VertexId v = b.add_vertex();
  return b.leg_in(v).leg_in(v).build();
}

inline OrientedGraph through_vertex() {  // one in, one out
  GraphBuilder b;
  VertexId v = b.add_vertex();
  return b.leg_in(v).leg_out(v).build();
}

inline OrientedGraph bare_edge() {
  GraphBuilder b;
  VertexId u = b.add_vertex(), v = b.add_vertex();
  return b.edge(u, v).build();
}

inline OrientedGraph double_edge() {
  GraphBuilder b;
  VertexId u = b.add_vertex(), v = b.add_vertex();
  return b.edge(u, v).edge(u, v).build();
}

inline OrientedGraph two_cycle() {
  GraphBuilder b;
  VertexId u = b.add_vertex(), v = b.add_vertex();
  return b.edge(u, v).edge(v, u).build();
}

inline OrientedGraph edge_two_in() {  // edge plus an incoming leg at each end
  GraphBuilder b;
  VertexId u = b.add_vertex(), v = b.add_vertex();
  return b.edge(u, v).leg_in(u).leg_in(v).build();
}

inline OrientedGraph edge_two_out() {
  GraphBuilder b;
  VertexId u = b.add_vertex(), v = b.add_vertex();
  return b.edge(u, v).leg_out(u).leg_out(v).build();
}

inline OrientedGraph edge_through() {  // out at the source, in at the target
  GraphBuilder b;
  VertexId u = b.add_vertex(), v = b.add_vertex();
  return b.edge(u, v).leg_out(u).leg_in(v).build();
}

inline Tensor2 expect2(std::vector<std::pair<std::vector<OrientedGraph>,
                                             std::vector<OrientedGraph>>>
                           terms,
                       AlgebraMode mode) {
  Tensor2 out;
  for (const auto& [lhs, rhs] : terms) {
    OrientedGraph l, r;
    for (const auto& g : lhs) l = disjoint_union(l, g);
    for (const auto& g : rhs) r = disjoint_union(r, g);
    out = out + tensor_combine(from_graph(l, mode), from_graph(r, mode));
  }
  return out;
}

}  // namespace golden_detail

// Recomputes the ten displayed triangle coproducts and compares them, term
// by term, against independently built expected tensors.
inline CheckReport golden_suite() {
  using namespace golden_detail;
  law_detail::Run run("golden");
  OrientedGraph t = triangle_graph();
  using CV = CoverVariant;
  using AM = AlgebraMode;
  using EP = ExternalPolicy;

  auto check = [&](const std::string& label, const Tensor2& actual,
                   const Tensor2& expected) {
    run.check(actual == expected, t, label + ": " + emit(expected, EmitFormat::Text),
              emit(actual, EmitFormat::Text));
  };

  // full coproduct, bialgebra, kept externals: 5 terms
  check("full bialgebra keep",
        coproduct(t, {CV::Full, AM::Bialgebra, EP::Keep}),
        expect2({{{source2(), through_vertex(), sink2()}, {t}},
                 {{t}, {point()}},
                 {{edge_two_in(), source2()}, {double_edge()}},
                 {{edge_through(), through_vertex()}, {two_cycle()}},
                 {{edge_two_out(), sink2()}, {double_edge()}}},
                AM::Bialgebra));

  // Hopf quotient of the same: 5 terms
  check("full hopf keep", coproduct(t, {CV::Full, AM::Hopf, EP::Keep}),
        expect2({{{}, {t}},
                 {{t}, {}},
                 {{edge_two_in()}, {double_edge()}},
                 {{edge_through()}, {two_cycle()}},
                 {{edge_two_out()}, {double_edge()}}},
                AM::Hopf));

  // locally 1PI variant: only the trivial covers
  check("1pi bialgebra keep",
        coproduct(t, {CV::Locally1PI, AM::Bialgebra, EP::Keep}),
        expect2({{{source2(), through_vertex(), sink2()}, {t}},
                 {{t}, {point()}}},
                AM::Bialgebra));
  check("1pi hopf keep", coproduct(t, {CV::Locally1PI, AM::Hopf, EP::Keep}),
        expect2({{{}, {t}}, {{t}, {}}}, AM::Hopf));

  // cycle-free variant: the two-cycle contraction drops out
  check("cf bialgebra keep",
        coproduct(t, {CV::PosetCompatible, AM::Bialgebra, EP::Keep}),
        expect2({{{source2(), through_vertex(), sink2()}, {t}},
                 {{t}, {point()}},
                 {{edge_two_in(), source2()}, {double_edge()}},
                 {{edge_two_out(), sink2()}, {double_edge()}}},
                AM::Bialgebra));
  check("cf hopf keep",
        coproduct(t, {CV::PosetCompatible, AM::Hopf, EP::Keep}),
        expect2({{{}, {t}},
                 {{t}, {}},
                 {{edge_two_in()}, {double_edge()}},
                 {{edge_two_out()}, {double_edge()}}},
                AM::Hopf));

  // admissible cuts with kept externals: ideals of the chain a < b < c
  check("cut keep", cut_coproduct(t, EP::Keep),
        expect2({{{t}, {}},
                 {{}, {t}},
                 {{edge_two_in()}, {source2()}},
                 {{sink2()}, {edge_two_out()}}},
                AM::Bialgebra));

  // discarded externals: the coefficient-2 collision
  check("full bialgebra discard",
        coproduct(t, {CV::Full, AM::Bialgebra, EP::Discard}),
        expect2({{{point(), point(), point()}, {t}},
                 {{t}, {point()}},
                 {{bare_edge(), point()}, {double_edge()}},
                 {{bare_edge(), point()}, {two_cycle()}},
                 {{bare_edge(), point()}, {double_edge()}}},
                AM::Bialgebra));
  check("full hopf discard",
        coproduct(t, {CV::Full, AM::Hopf, EP::Discard}),
        expect2({{{}, {t}},
                 {{t}, {}},
                 {{bare_edge()}, {double_edge()}},
                 {{bare_edge()}, {two_cycle()}},
                 {{bare_edge()}, {double_edge()}}},
                AM::Hopf));
  check("cut discard", cut_coproduct(t, EP::Discard),
        expect2({{{t}, {}},
                 {{}, {t}},
                 {{bare_edge()}, {point()}},
                 {{point()}, {bare_edge()}}},
                AM::Bialgebra));

  return run.take();
}

}  // namespace hopfgraph
