#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "seagull/engine.hpp"

namespace seagull {

// Length-n 0/1 vector with (at most) a single 1, marking a node index. All
// node identities in the protocol travel in this encoding: an oblivious
// access then becomes an inner product over the full vector, so the touched
// positions are the same for every input. The all-zero vector is the
// explicit "absent" encoding.
template <typename ShareT>
struct SharedOneHotT {
  std::vector<ShareT> components;

  std::size_t size() const { return components.size(); }
};

// Shared vector of field 0/1 bits over the node universe (Algorithm state
// such as the visited vector V).
template <typename ShareT>
struct SharedBitVectorT {
  std::vector<ShareT> bits;

  std::size_t size() const { return bits.size(); }
};

using SharedOneHot = SharedOneHotT<ShareSet>;
using SharedBitVector = SharedBitVectorT<ShareSet>;

// Share representation of a publicly known index. Session-public values
// (destination, query endpoints) need no randomness: the plain constant
// encoding reconstructs correctly and costs no communication.
template <MpcEngine E>
SharedOneHotT<typename E::Share> onehot_of_public(E& eng, std::size_t index,
                                                  std::size_t n) {
  if (index >= n) throw std::out_of_range("onehot_of_public: index >= n");
  SharedOneHotT<typename E::Share> out;
  out.components.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    out.components.push_back(eng.constant(FieldElement(j == index ? 1 : 0)));
  return out;
}

template <MpcEngine E>
SharedBitVectorT<typename E::Share> zero_bitvector(E& eng, std::size_t n) {
  SharedBitVectorT<typename E::Share> v;
  v.bits.assign(n, eng.constant(kZero));
  return v;
}

// <v, e> = v[index(e)]. Exactly n multiplications in one exchange, whatever
// the contents.
template <MpcEngine E>
typename E::Share oblivious_read(E& eng,
                                 const SharedBitVectorT<typename E::Share>& v,
                                 const SharedOneHotT<typename E::Share>& e) {
  if (v.size() != e.size())
    throw std::invalid_argument("oblivious_read: length mismatch");
  std::vector<typename E::Share> products(v.size());
  eng.mul_batch(std::span(v.bits), std::span(e.components),
                std::span(products));
  typename E::Share acc = eng.constant(kZero);
  for (const auto& p : products) acc = eng.add(acc, p);
  return acc;
}

// v[index(e)] |= bit, other positions unchanged:
// v'[j] = v[j] + bit*e[j] - bit*e[j]*v[j]. Exactly 2n multiplications in two
// exchanges.
template <MpcEngine E>
SharedBitVectorT<typename E::Share> oblivious_conditional_write(
    E& eng, const SharedBitVectorT<typename E::Share>& v,
    const SharedOneHotT<typename E::Share>& e, const typename E::Share& bit) {
  const std::size_t n = v.size();
  if (e.size() != n)
    throw std::invalid_argument("oblivious_conditional_write: length mismatch");

  std::vector<typename E::Share> bit_vec(n, bit);
  std::vector<typename E::Share> gated(n);
  eng.mul_batch(std::span<const typename E::Share>(bit_vec),
                std::span(e.components), std::span(gated));

  std::vector<typename E::Share> overlap(n);
  eng.mul_batch(std::span<const typename E::Share>(gated), std::span(v.bits),
                std::span(overlap));

  SharedBitVectorT<typename E::Share> out;
  out.bits.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    out.bits.push_back(eng.sub(eng.add(v.bits[j], gated[j]), overlap[j]));
  return out;
}

// a OR b for field 0/1 bits: a + b - a*b.
template <MpcEngine E>
typename E::Share oblivious_or(E& eng, const typename E::Share& a,
                               const typename E::Share& b) {
  typename E::Share prod;
  eng.mul_batch(std::span<const typename E::Share>(&a, 1),
                std::span<const typename E::Share>(&b, 1),
                std::span<typename E::Share>(&prod, 1));
  return eng.sub(eng.add(a, b), prod);
}

// True iff any of the 0/1 bits is set. The bit count stays below p, so the
// masked zero-test of the plain sum is exact; only emptiness becomes
// public, never the frontier size.
template <MpcEngine E>
bool frontier_flag(E& eng, std::span<const typename E::Share> bits) {
  typename E::Share sum = eng.constant(kZero);
  for (const auto& b : bits) sum = eng.add(sum, b);
  return !eng.masked_zero_test(sum);
}

// Secret inner product of two equal-length share vectors, one exchange.
template <MpcEngine E>
typename E::Share inner_product(E& eng,
                                std::span<const typename E::Share> a,
                                std::span<const typename E::Share> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("inner_product: length mismatch");
  std::vector<typename E::Share> products(a.size());
  eng.mul_batch(a, b, std::span(products));
  typename E::Share acc = eng.constant(kZero);
  for (const auto& p : products) acc = eng.add(acc, p);
  return acc;
}

}  // namespace seagull
