#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hopfgraph/partition.hpp"
#include "hopfgraph/poset.hpp"

namespace hopfgraph {

// The four summation predicates of the covering-subgraph coproducts.
enum class CoverVariant : std::uint8_t {
  Full,
  Locally1PI,
  PosetCompatible,
  PosetCompatibleLocally1PI,
};

inline bool variant_needs_cycle_free(CoverVariant v) {
  return v == CoverVariant::PosetCompatible ||
         v == CoverVariant::PosetCompatibleLocally1PI;
}

namespace detail {

// Restricted-growth-string enumeration of set partitions of g's vertices,
// pruned so a block never crosses a connected component (blocks must be
// connected), with a full per-block connectivity filter at the leaves.
inline std::vector<VertexPartition> connected_partitions(
    const OrientedGraph& g) {
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  std::vector<VertexPartition> out;
  if (n == 0) {
    out.push_back(VertexPartition{});  // the empty partition of the unit
    return out;
  }
  VertexIndex ix(g);
  auto comp = component_labels(g, ix);

  std::vector<std::uint32_t> rgs(n, 0);
  std::vector<std::size_t> block_comp(n, 0);
  auto emit = [&](std::uint32_t nblocks) {
    std::vector<std::vector<VertexId>> blocks(nblocks);
    for (std::size_t i = 0; i < n; ++i) blocks[rgs[i]].push_back(vs[i]);
    for (const auto& b : blocks) {
      if (!subset_connected(g, b)) return;
    }
    out.push_back(VertexPartition::of(std::move(blocks)));
  };

  auto rec = [&](auto&& self, std::size_t i, std::uint32_t max_used) -> void {
    if (i == n) {
      emit(max_used);
      return;
    }
    for (std::uint32_t b = 0; b <= max_used; ++b) {
      bool opens = (b == max_used);
      if (!opens && block_comp[b] != comp[i]) continue;  // block can't cross components
      rgs[i] = b;
      if (opens) block_comp[b] = comp[i];
      self(self, i + 1, opens ? max_used + 1 : max_used);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool blocks_locally_1pi(const OrientedGraph& g,
                               const VertexPartition& p) {
  for (const auto& b : p.blocks) {
    if (!is_1pi(induced_subgraph(g, b, ExternalPolicy::Discard))) return false;
  }
  return true;
}

}  // namespace detail

// Exactly the partitions of V(g) into connected blocks satisfying the
// variant predicate, in lexicographic order of the sorted blocks.
inline std::vector<VertexPartition> enumerate_covering_partitions(
    const OrientedGraph& g, CoverVariant variant) {
  if (variant_needs_cycle_free(variant) && !is_cycle_free(g)) {
    throw GraphError(errc::not_cycle_free,
                     "variant requires a cycle-free graph");
  }
  std::vector<VertexPartition> all = detail::connected_partitions(g);
  if (variant == CoverVariant::Full) return all;
  std::vector<VertexPartition> out;
  for (auto& p : all) {
    if (variant == CoverVariant::Locally1PI ||
        variant == CoverVariant::PosetCompatibleLocally1PI) {
      if (!detail::blocks_locally_1pi(g, p)) continue;
    }
    if (variant == CoverVariant::PosetCompatible ||
        variant == CoverVariant::PosetCompatibleLocally1PI) {
      if (!is_cycle_free(contract(g, p))) continue;
    }
    out.push_back(std::move(p));
  }
  return out;
}

// An ordered bipartition (V1, V2) of the vertices of a cycle-free graph
// such that no comparable pair has the V1 member below the V2 member;
// equivalently V2 is an order ideal.
struct AdmissibleCut {
  std::vector<VertexId> upper;  // V1
  std::vector<VertexId> lower;  // V2

  friend auto operator<=>(const AdmissibleCut&, const AdmissibleCut&) = default;
};

// All admissible cuts, including (V, empty) and (empty, V). Deterministic
// order: by the bitmask of the lower part over the sorted vertex list.
inline std::vector<AdmissibleCut> enumerate_admissible_cuts(
    const OrientedGraph& g) {
  ReachabilityPoset poset = reachability_order(g);  // throws NotCycleFree
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  if (n > 24) {
    throw GraphError(errc::bad_config,
                     "admissible-cut enumeration limited to 24 vertices");
  }
  std::vector<AdmissibleCut> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    AdmissibleCut cut;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        cut.lower.push_back(vs[i]);
      } else {
        cut.upper.push_back(vs[i]);
      }
    }
    bool ok = true;
    for (VertexId v1 : cut.upper) {
      for (VertexId v2 : cut.lower) {
        if (poset.less(v1, v2)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) out.push_back(std::move(cut));
  }
  return out;
}

}  // namespace hopfgraph
