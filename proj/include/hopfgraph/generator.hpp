#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "hopfgraph/analysis.hpp"
#include "hopfgraph/canonical.hpp"
#include "hopfgraph/graph.hpp"
#include "hopfgraph/rational.hpp"

namespace hopfgraph {

struct GeneratorConfig {
  std::size_t max_vertices = 4;
  std::size_t max_internal_edges = 5;
  std::uint32_t edge_type_count = 1;
  Rational external_leg_probability = 0;
  bool cycle_free_only = false;
  std::uint64_t seed = 0;
};

namespace detail {

// mt19937_64 with modulo mapping: identical streams on every platform,
// unlike std::uniform_int_distribution.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

  bool bernoulli(const Rational& p) {
    auto den = denominator(p).convert_to<std::uint64_t>();
    auto num = numerator(p).convert_to<std::uint64_t>();
    return below(den) < num;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

private:
  std::mt19937_64 eng_;
};

inline OrientedGraph random_graph(const GeneratorConfig& cfg, Rng& rng) {
  std::size_t n = rng.below(cfg.max_vertices + 1);
  GraphBuilder b;
  std::vector<VertexId> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back(b.add_vertex());

  auto draw_type = [&]() {
    return static_cast<std::uint32_t>(1 + rng.below(cfg.edge_type_count));
  };

  if (n > 0) {
    std::size_t m = rng.below(cfg.max_internal_edges + 1);
    if (cfg.cycle_free_only) {
      // edges only respect a random vertex order, hence no directed cycle
      std::vector<VertexId> order = vs;
      rng.shuffle(order);
      if (n >= 2) {
        for (std::size_t k = 0; k < m; ++k) {
          std::size_t i = rng.below(n), j = rng.below(n);
          if (i == j) continue;
          if (i > j) std::swap(i, j);
          b.edge(order[i], order[j], draw_type());
        }
      }
    } else {
      for (std::size_t k = 0; k < m; ++k) {
        b.edge(vs[rng.below(n)], vs[rng.below(n)], draw_type());
      }
    }
    for (VertexId v : vs) {
      for (int rep = 0; rep < 2; ++rep) {
        if (rng.bernoulli(cfg.external_leg_probability)) {
          if (rng.below(2) == 0) {
            b.leg_in(v, draw_type());
          } else {
            b.leg_out(v, draw_type());
          }
        }
      }
    }
  }
  return b.build();
}

}  // namespace detail

// Deterministic for a fixed seed; with cycle_free_only the outputs never
// contain a directed cycle by construction.
inline std::vector<OrientedGraph> generate_graphs(const GeneratorConfig& cfg,
                                                  std::size_t count) {
  if (cfg.external_leg_probability < 0 || cfg.external_leg_probability > 1) {
    throw GraphError(errc::bad_config,
                     "external_leg_probability must lie in [0,1]");
  }
  if (cfg.edge_type_count == 0) {
    throw GraphError(errc::bad_config, "edge_type_count must be positive");
  }
  detail::Rng rng(cfg.seed);
  std::vector<OrientedGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(detail::random_graph(cfg, rng));
  }
  return out;
}

struct ExhaustiveOptions {
  std::size_t max_vertices = 4;
  std::size_t max_internal_edges = 5;
  bool cycle_free_only = false;
  bool connected_only = false;
};

// Every directed multigraph (one edge type, no legs) within the bounds, up
// to isomorphism; outputs are canonical representatives sorted by key.
inline std::vector<OrientedGraph> exhaustive_graphs(
    const ExhaustiveOptions& opt) {
  std::set<CanonicalKey> keys;
  for (std::size_t n = opt.connected_only ? 1 : 0; n <= opt.max_vertices; ++n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId s = 0; s < n; ++s) {
      for (VertexId t = 0; t < n; ++t) pairs.emplace_back(s, t);
    }
    // nondecreasing index sequences = edge multisets
    std::vector<std::size_t> picks;
    auto consider = [&]() {
      if (opt.connected_only && picks.size() + 1 < n) return;  // spanning bound
      GraphBuilder b;
      for (std::size_t i = 0; i < n; ++i) b.add_vertex();
      for (std::size_t k : picks) b.edge(pairs[k].first, pairs[k].second);
      OrientedGraph g = b.build();
      if (opt.connected_only && !is_connected(g)) return;
      if (opt.cycle_free_only && !is_cycle_free(g)) return;
      keys.insert(canonical_key(g));
    };
    auto rec = [&](auto&& self, std::size_t from) -> void {
      consider();
      if (picks.size() == opt.max_internal_edges) return;
      for (std::size_t k = from; k < pairs.size(); ++k) {
        picks.push_back(k);
        self(self, k);
        picks.pop_back();
      }
    };
    rec(rec, 0);
  }
  std::vector<OrientedGraph> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(decode_key(k));
  return out;
}

}  // namespace hopfgraph
