#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>

#include "hopfgraph/algebra.hpp"
#include "hopfgraph/enumerate.hpp"
#include "hopfgraph/tensor.hpp"

namespace hopfgraph {

// Selects one of the eight covering-subgraph coalgebras: a summation
// predicate, bialgebra vs Hopf quotient, and the external-edge policy.
struct CoalgebraConfig {
  CoverVariant variant = CoverVariant::Full;
  AlgebraMode mode = AlgebraMode::Bialgebra;
  ExternalPolicy externals = ExternalPolicy::Keep;

  friend auto operator<=>(const CoalgebraConfig&, const CoalgebraConfig&) = default;
};

enum class Grading : std::uint8_t { InternalEdges, LoopNumber, VertexCount };

// Sum over the monomial's factors; factors are connected, so their loop
// number is I - V + 1.
inline std::size_t degree(const Monomial& m, Grading grading) {
  std::size_t d = 0;
  for (const auto& k : m.factors) {
    switch (grading) {
      case Grading::InternalEdges: d += k.internal_count(); break;
      case Grading::LoopNumber: d += k.loop_count(); break;
      case Grading::VertexCount: d += k.vertex_count(); break;
    }
  }
  return d;
}

// Sum of gamma (x) Gamma/gamma over the variant's covering partitions.
inline Tensor2 coproduct(const OrientedGraph& g, const CoalgebraConfig& cfg) {
  Tensor2 out;
  for (const auto& p : enumerate_covering_partitions(g, cfg.variant)) {
    AlgebraElement left =
        from_graph(covering_subgraph(g, p, cfg.externals), cfg.mode);
    AlgebraElement right = from_graph(contract(g, p), cfg.mode);
    out = out + tensor_combine(left, right);
  }
  return out;
}

// Sum of Gamma(V1) (x) Gamma(V2) over the admissible cuts of a cycle-free
// graph; graded by the number of vertices. Factors stay in the bialgebra.
inline Tensor2 cut_coproduct(const OrientedGraph& g,
                             ExternalPolicy policy = ExternalPolicy::Keep) {
  Tensor2 out;
  for (const auto& cut : enumerate_admissible_cuts(g)) {
    AlgebraElement left =
        from_graph(induced_subgraph(g, cut.upper, policy), AlgebraMode::Bialgebra);
    AlgebraElement right =
        from_graph(induced_subgraph(g, cut.lower, policy), AlgebraMode::Bialgebra);
    out = out + tensor_combine(left, right);
  }
  return out;
}

namespace detail {

// (kind | variant | mode | policy) packed for memo keys
inline std::uint8_t cover_code(const CoalgebraConfig& cfg) {
  return static_cast<std::uint8_t>(
      (static_cast<unsigned>(cfg.variant) << 2) |
      (cfg.mode == AlgebraMode::Hopf ? 2u : 0u) |
      (cfg.externals == ExternalPolicy::Discard ? 1u : 0u));
}

inline std::uint8_t cut_code(ExternalPolicy policy) {
  return static_cast<std::uint8_t>(
      0x80u | (policy == ExternalPolicy::Discard ? 1u : 0u));
}

using DeltaMemo = std::map<std::pair<std::uint8_t, CanonicalKey>, Tensor2>;

inline DeltaMemo& delta_memo() {
  thread_local DeltaMemo memo;
  return memo;
}

inline const Tensor2& coproduct_connected(const CanonicalKey& k,
                                          const CoalgebraConfig& cfg) {
  auto& memo = delta_memo();
  auto key = std::make_pair(cover_code(cfg), k);
  auto it = memo.find(key);
  if (it == memo.end()) {
    Tensor2 t = coproduct(decode_key(k), cfg);
    it = memo.emplace(std::move(key), std::move(t)).first;
  }
  return it->second;
}

inline const Tensor2& cut_coproduct_connected(const CanonicalKey& k,
                                              ExternalPolicy policy) {
  auto& memo = delta_memo();
  auto key = std::make_pair(cut_code(policy), k);
  auto it = memo.find(key);
  if (it == memo.end()) {
    Tensor2 t = cut_coproduct(decode_key(k), policy);
    it = memo.emplace(std::move(key), std::move(t)).first;
  }
  return it->second;
}

inline Tensor2 unit_tensor2() {
  Tensor2 t;
  t.add_term({Monomial::unit(), Monomial::unit()}, 1);
  return t;
}

template <class DeltaConn>
Tensor2 extend_coproduct(const AlgebraElement& x, DeltaConn&& delta_connected) {
  Tensor2 out;
  for (const auto& [m, c] : x.terms()) {
    Tensor2 acc = unit_tensor2();
    for (const auto& k : m.factors) acc = acc * delta_connected(k);
    out = out + c * acc;
  }
  return out;
}

}  // namespace detail

// Linear, multiplicative extension to arbitrary elements (the coproduct is
// an algebra morphism). Connected coproducts are memoized per config.
inline Tensor2 coproduct(const AlgebraElement& x, const CoalgebraConfig& cfg) {
  return detail::extend_coproduct(x, [&](const CanonicalKey& k) {
    return detail::coproduct_connected(k, cfg);
  });
}

inline Tensor2 cut_coproduct(const AlgebraElement& x,
                             ExternalPolicy policy = ExternalPolicy::Keep) {
  return detail::extend_coproduct(x, [&](const CanonicalKey& k) {
    return detail::cut_coproduct_connected(k, policy);
  });
}

// Counit of the covering-subgraph coalgebras. In bialgebra mode it is 1 on
// monomials all of whose factors are residues (no internal edges) and 0
// otherwise; this is the unique linear functional satisfying the counit
// axiom against the covering-subgraph sum. In Hopf mode only the unit
// monomial survives.
inline Rational counit(const AlgebraElement& x, const CoalgebraConfig& cfg) {
  Rational out = 0;
  for (const auto& [m, c] : x.terms()) {
    if (cfg.mode == AlgebraMode::Bialgebra) {
      bool residues_only = true;
      for (const auto& k : m.factors) {
        if (k.internal_count() > 0) {
          residues_only = false;
          break;
        }
      }
      if (residues_only) out += c;
    } else if (m.is_unit()) {
      out += c;
    }
  }
  return out;
}

// Counit of the admissible-cut coalgebra: 1 on the unit monomial only.
inline Rational cut_counit(const AlgebraElement& x) {
  Rational out = 0;
  for (const auto& [m, c] : x.terms()) {
    if (m.is_unit()) out += c;
  }
  return out;
}

namespace detail {

struct AntipodeOps {
  std::uint8_t code;
  Grading grading;
  std::function<const Tensor2&(const CanonicalKey&)> delta_connected;
  std::function<bool(const CanonicalKey&)> is_unit_class;
};

using AntipodeMemo = std::map<std::pair<std::uint8_t, CanonicalKey>, AlgebraElement>;

inline AntipodeMemo& antipode_memo() {
  thread_local AntipodeMemo memo;
  return memo;
}

inline AlgebraElement antipode_connected(const CanonicalKey& k,
                                         const AntipodeOps& ops);

inline AlgebraElement antipode_monomial(const Monomial& m,
                                        const AntipodeOps& ops) {
  AlgebraElement out = AlgebraElement::unit();
  for (const auto& k : m.factors) out = out * antipode_connected(k, ops);
  return out;
}

// S(G) = -G - sum S(m1) m2 over the reduced coproduct; terminates because
// reduced terms strictly lower the degree.
inline AlgebraElement antipode_connected(const CanonicalKey& k,
                                         const AntipodeOps& ops) {
  if (ops.is_unit_class(k)) return AlgebraElement::unit();
  auto& memo = antipode_memo();
  auto mkey = std::make_pair(ops.code, k);
  if (auto it = memo.find(mkey); it != memo.end()) return it->second;

  Monomial mk = Monomial::single(k);
  std::size_t deg = degree(mk, ops.grading);
  Tensor2 reduced = ops.delta_connected(k);
  reduced.add_term({mk, Monomial::unit()}, -1);
  reduced.add_term({Monomial::unit(), mk}, -1);

  AlgebraElement s = AlgebraElement::monomial(mk, -1);
  for (const auto& [key, c] : reduced.terms()) {
    if (degree(key[0], ops.grading) >= deg ||
        degree(key[1], ops.grading) >= deg) {
      throw GraphError(errc::bad_config,
                       "antipode recursion does not terminate: generator lies "
                       "outside the coalgebra's domain");
    }
    s = s - c * (antipode_monomial(key[0], ops) *
                 AlgebraElement::monomial(key[1]));
  }
  memo.emplace(std::move(mkey), s);
  return s;
}

}  // namespace detail

// Antipode of the connected graded Hopf algebras (Hopf mode only; the
// bialgebras have grouplike residues without inverses).
inline AlgebraElement antipode(const AlgebraElement& x,
                               const CoalgebraConfig& cfg) {
  if (cfg.mode != AlgebraMode::Hopf) {
    throw GraphError(errc::not_a_hopf_algebra,
                     "antipode requires the Hopf quotient");
  }
  detail::AntipodeOps ops{
      detail::cover_code(cfg),
      Grading::InternalEdges,
      [&cfg](const CanonicalKey& k) -> const Tensor2& {
        return detail::coproduct_connected(k, cfg);
      },
      [](const CanonicalKey& k) { return k.internal_count() == 0; },
  };
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) {
    out = out + c * detail::antipode_monomial(m, ops);
  }
  return out;
}

// Antipode of the admissible-cut Hopf algebra (connected under the vertex
// grading, so no quotient is needed).
inline AlgebraElement cut_antipode(const AlgebraElement& x,
                                   ExternalPolicy policy = ExternalPolicy::Keep) {
  detail::AntipodeOps ops{
      detail::cut_code(policy),
      Grading::VertexCount,
      [policy](const CanonicalKey& k) -> const Tensor2& {
        return detail::cut_coproduct_connected(k, policy);
      },
      [](const CanonicalKey&) { return false; },
  };
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) {
    out = out + c * detail::antipode_monomial(m, ops);
  }
  return out;
}

enum class CoactionSide : std::uint8_t { Left, Right };

inline Tensor2 swap_slots(const Tensor2& t) {
  Tensor2 out;
  for (const auto& [k, c] : t.terms()) out.add_term({k[1], k[0]}, c);
  return out;
}

// The poset-compatible coproduct read as a coaction on the admissible-cut
// Hopf algebra: Left is gamma (x) Gamma/gamma, Right the transpose.
inline Tensor2 coaction(const OrientedGraph& g, CoactionSide side,
                        ExternalPolicy policy = ExternalPolicy::Keep) {
  CoalgebraConfig cfg{CoverVariant::PosetCompatible, AlgebraMode::Bialgebra,
                      policy};
  Tensor2 t = coproduct(g, cfg);
  return side == CoactionSide::Left ? t : swap_slots(t);
}

inline Tensor2 coaction(const AlgebraElement& x, CoactionSide side,
                        ExternalPolicy policy = ExternalPolicy::Keep) {
  CoalgebraConfig cfg{CoverVariant::PosetCompatible, AlgebraMode::Bialgebra,
                      policy};
  Tensor2 t = coproduct(x, cfg);
  return side == CoactionSide::Left ? t : swap_slots(t);
}

// a (x) b (x) c (x) d  ->  ac (x) b (x) d
inline Tensor3 m13(const Tensor4& t) {
  Tensor3 out;
  for (const auto& [k, c] : t.terms()) {
    out.add_term({k[0] * k[2], k[1], k[3]}, c);
  }
  return out;
}

}  // namespace hopfgraph
