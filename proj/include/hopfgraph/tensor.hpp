#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <type_traits>
#include <utility>

#include "hopfgraph/algebra.hpp"

namespace hopfgraph {

// K-fold tensor over the monomial basis; same normalization rules as
// AlgebraElement (no zero coefficients, canonical term order).
template <std::size_t K>
class Tensor {
  static_assert(K >= 2 && K <= 4, "tensor arity out of range");

public:
  using Key = std::array<Monomial, K>;

  Tensor() = default;

  static constexpr std::size_t arity() { return K; }

  const std::map<Key, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  std::size_t term_count() const { return terms_.size(); }

  void add_term(Key key, Rational coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(key), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend Tensor operator+(const Tensor& a, const Tensor& b) {
    Tensor out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k, c);
    return out;
  }

  friend Tensor operator-(const Tensor& a, const Tensor& b) {
    Tensor out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k, -c);
    return out;
  }

  friend Tensor operator*(const Rational& c, const Tensor& a) {
    Tensor out;
    for (const auto& [k, v] : a.terms_) out.add_term(k, c * v);
    return out;
  }

  // slotwise product: (a1..aK)·(b1..bK) = (a1 b1 .. aK bK), bilinearly
  friend Tensor operator*(const Tensor& a, const Tensor& b) {
    Tensor out;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        Key key;
        for (std::size_t i = 0; i < K; ++i) key[i] = ka[i] * kb[i];
        out.add_term(std::move(key), ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;

private:
  std::map<Key, Rational> terms_;
};

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;
using Tensor4 = Tensor<4>;

namespace detail {

template <std::size_t K>
void combine_rec(Tensor<K>& out, std::array<const AlgebraElement*, K> parts,
                 std::size_t slot, typename Tensor<K>::Key& key,
                 const Rational& coeff) {
  if (slot == K) {
    out.add_term(key, coeff);
    return;
  }
  for (const auto& [m, c] : parts[slot]->terms()) {
    key[slot] = m;
    combine_rec(out, parts, slot + 1, key, coeff * c);
  }
}

}  // namespace detail

// Tensor product of 2..4 elements: distributes sums, never mixes slots.
template <class... Es>
  requires(sizeof...(Es) >= 2 && sizeof...(Es) <= 4 &&
           (std::is_same_v<std::remove_cvref_t<Es>, AlgebraElement> && ...))
Tensor<sizeof...(Es)> tensor_combine(const Es&... factors) {
  constexpr std::size_t K = sizeof...(Es);
  Tensor<K> out;
  std::array<const AlgebraElement*, K> parts{&factors...};
  typename Tensor<K>::Key key;
  detail::combine_rec(out, parts, 0, key, Rational(1));
  return out;
}

namespace detail {

template <std::size_t K>
void check_slot(std::size_t slot) {
  if (slot >= K) {
    throw GraphError(errc::arity_out_of_range,
                     "slot " + std::to_string(slot) + " out of range for a " +
                         std::to_string(K) + "-tensor");
  }
}

}  // namespace detail

// Applies a linear map to one slot. An AlgebraElement-valued map keeps the
// arity; a Tensor2-valued map splices its two slots in place of the one.
template <std::size_t K, class F>
auto tensor_map_slotwise(const Tensor<K>& t, std::size_t slot, F&& f) {
  detail::check_slot<K>(slot);
  using R = std::invoke_result_t<F&, const AlgebraElement&>;
  if constexpr (std::is_same_v<R, AlgebraElement>) {
    Tensor<K> out;
    for (const auto& [key, coeff] : t.terms()) {
      AlgebraElement image = f(AlgebraElement::monomial(key[slot]));
      for (const auto& [m, c] : image.terms()) {
        typename Tensor<K>::Key nk = key;
        nk[slot] = m;
        out.add_term(std::move(nk), coeff * c);
      }
    }
    return out;
  } else {
    static_assert(std::is_same_v<R, Tensor2>,
                  "slot map must return AlgebraElement or Tensor2");
    static_assert(K < 4, "splicing a 4-tensor would exceed the max arity");
    Tensor<K + 1> out;
    for (const auto& [key, coeff] : t.terms()) {
      Tensor2 image = f(AlgebraElement::monomial(key[slot]));
      for (const auto& [pair, c] : image.terms()) {
        typename Tensor<K + 1>::Key nk;
        for (std::size_t i = 0; i < slot; ++i) nk[i] = key[i];
        nk[slot] = pair[0];
        nk[slot + 1] = pair[1];
        for (std::size_t i = slot + 1; i < K; ++i) nk[i + 1] = key[i];
        out.add_term(std::move(nk), coeff * c);
      }
    }
    return out;
  }
}

// Contracts one slot with a scalar functional (e.g. a counit).
template <class F>
AlgebraElement contract_slot(const Tensor2& t, std::size_t slot, F&& f) {
  detail::check_slot<2>(slot);
  AlgebraElement out;
  for (const auto& [key, coeff] : t.terms()) {
    Rational s = f(AlgebraElement::monomial(key[slot]));
    out.add_term(key[1 - slot], coeff * s);
  }
  return out;
}

// Multiplies the two slots together: m(x ⊗ y) = xy.
inline AlgebraElement multiply_slots(const Tensor2& t) {
  AlgebraElement out;
  for (const auto& [key, coeff] : t.terms()) {
    out.add_term(key[0] * key[1], coeff);
  }
  return out;
}

}  // namespace hopfgraph
