#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "hopfgraph/analysis.hpp"
#include "hopfgraph/canonical.hpp"
#include "hopfgraph/partition.hpp"
#include "hopfgraph/rational.hpp"

namespace hopfgraph {

// In Hopf mode every internal-edge-free connected graph is identified with
// the unit (the quotient by the bi-ideal of residues).
enum class AlgebraMode : std::uint8_t { Bialgebra, Hopf };

// A multiset of canonical keys of nonempty connected graphs; the empty
// multiset is the unit. This is the free-commutative-algebra basis.
struct Monomial {
  std::vector<CanonicalKey> factors;  // sorted ascending

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  static Monomial unit() { return {}; }

  static Monomial single(CanonicalKey k) { return Monomial{{std::move(k)}}; }

  bool is_unit() const { return factors.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors.resize(a.factors.size() + b.factors.size());
    std::merge(a.factors.begin(), a.factors.end(), b.factors.begin(),
               b.factors.end(), out.factors.begin());
    return out;
  }
};

// Finite rational combination of monomials; zero coefficients are never
// stored and term order is canonical, so operator== is exact equality.
class AlgebraElement {
public:
  AlgebraElement() = default;

  static AlgebraElement zero() { return {}; }

  static AlgebraElement unit() { return monomial(Monomial::unit()); }

  static AlgebraElement monomial(Monomial m, Rational coeff = 1) {
    AlgebraElement x;
    x.add_term(std::move(m), std::move(coeff));
    return x;
  }

  const std::map<Monomial, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  std::size_t term_count() const { return terms_.size(); }

  void add_term(Monomial m, Rational coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(m), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend AlgebraElement operator+(const AlgebraElement& a,
                                  const AlgebraElement& b) {
    AlgebraElement out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }

  friend AlgebraElement operator-(const AlgebraElement& a,
                                  const AlgebraElement& b) {
    AlgebraElement out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
  }

  friend AlgebraElement operator-(const AlgebraElement& a) {
    return AlgebraElement::zero() - a;
  }

  friend AlgebraElement operator*(const Rational& c, const AlgebraElement& a) {
    AlgebraElement out;
    for (const auto& [m, k] : a.terms_) out.add_term(m, c * k);
    return out;
  }

  friend AlgebraElement operator*(const AlgebraElement& a,
                                  const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        out.add_term(ma * mb, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
  std::map<Monomial, Rational> terms_;
};

inline AlgebraElement scale(const Rational& c, const AlgebraElement& x) {
  return c * x;
}

// The connected components of g as a monomial of canonical keys, with
// coefficient 1. In Hopf mode, factors without internal edges project to
// the unit and are dropped.
inline AlgebraElement from_graph(const OrientedGraph& g, AlgebraMode mode) {
  Monomial m;
  for (const auto& comp : connected_components(g)) {
    OrientedGraph piece = induced_subgraph(g, comp, ExternalPolicy::Keep);
    CanonicalKey k = canonical_key(piece);
    if (mode == AlgebraMode::Hopf && k.internal_count() == 0) continue;
    m.factors.push_back(std::move(k));
  }
  std::sort(m.factors.begin(), m.factors.end());
  return AlgebraElement::monomial(std::move(m));
}

// Strips internal-edge-free factors from every monomial: the projection
// onto the Hopf quotient.
inline AlgebraElement hopf_project(const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) {
    Monomial pm;
    for (const auto& k : m.factors) {
      if (k.internal_count() > 0) pm.factors.push_back(k);
    }
    out.add_term(std::move(pm), c);
  }
  return out;
}

}  // namespace hopfgraph
