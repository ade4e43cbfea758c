#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "seagull/errors.hpp"
#include "seagull/shares.hpp"
#include "seagull/transcript.hpp"

namespace seagull {

// Pre-distributed sharing of (a, b, ab). One triple drives one secure
// multiplication and must never be reused: the two openings x-a and y-b are
// one-time-padded by a and b.
struct BeaverTriple {
  ShareSet a, b, c;
  std::uint64_t id = 0;
  bool consumed = false;
};

// Sharing of a uniform nonzero r, used to open r*x so that only the
// zero/nonzero bit of x becomes public. Single-use for the same reason as
// triples.
struct RandomMask {
  ShareSet r;
  std::uint64_t id = 0;
  bool consumed = false;
};

inline BeaverTriple make_triple(std::size_t t, Rng& rng, std::uint64_t id) {
  BeaverTriple triple;
  triple.id = id;
  triple.a = ShareSet(t);
  triple.b = ShareSet(t);
  FieldElement a, b;
  for (std::size_t i = 0; i < t; ++i) {
    triple.a[i] = rng.next_field();
    triple.b[i] = rng.next_field();
    a += triple.a[i];
    b += triple.b[i];
  }
  triple.c = share(a * b, t, rng);
  return triple;
}

inline RandomMask make_mask(std::size_t t, Rng& rng, std::uint64_t id) {
  return RandomMask{share(rng.next_nonzero_field(), t, rng), id, false};
}

// Offline-phase source of correlated randomness. The dealer role is
// distinct from the verifier parties and holds nothing once a value is
// handed out. Generation is lazy and seed-deterministic so that a pool
// "sized" for billions of multiplications costs no memory up front, while
// the declared capacity still models a finite pre-distributed pool.
class DealerPool {
 public:
  DealerPool(std::size_t t, std::uint64_t seed, std::uint64_t triple_capacity,
             std::uint64_t mask_capacity)
      : t_(t),
        triple_rng_(derive_triple_rng(seed)),
        mask_rng_(derive_mask_rng(seed)),
        triple_capacity_(triple_capacity),
        mask_capacity_(mask_capacity) {}

  // The two sub-streams are derived from the seed in a fixed order, so the
  // triple sequence does not depend on how triple and mask draws interleave.
  static Rng derive_triple_rng(std::uint64_t seed) {
    Rng root(seed);
    return root.fork(0x7472);
  }
  static Rng derive_mask_rng(std::uint64_t seed) {
    Rng root(seed);
    root.next_u64();  // skip the triple fork's draw
    return root.fork(0x6d6b);
  }

  // Unlimited pool for in-process use.
  static DealerPool unbounded(std::size_t t, std::uint64_t seed) {
    return DealerPool(t, seed, UINT64_MAX, UINT64_MAX);
  }

  std::size_t party_count() const { return t_; }
  std::uint64_t triples_remaining() const {
    return triple_capacity_ - triples_used_;
  }
  std::uint64_t masks_remaining() const { return mask_capacity_ - masks_used_; }

  // Abort-before-round-1 check: a protocol reserves its whole requirement
  // before opening anything.
  void reserve(std::uint64_t triples, std::uint64_t masks) const {
    if (triples > triples_remaining() || masks > masks_remaining())
      throw ResourceExhausted(
          "dealer pool too small: need " + std::to_string(triples) +
          " triples / " + std::to_string(masks) + " masks, have " +
          std::to_string(triples_remaining()) + " / " +
          std::to_string(masks_remaining()));
  }

  BeaverTriple next_triple() {
    if (triples_used_ >= triple_capacity_)
      throw ResourceExhausted("dealer pool out of Beaver triples");
    return make_triple(t_, triple_rng_, triples_used_++);
  }

  RandomMask next_mask() {
    if (masks_used_ >= mask_capacity_)
      throw ResourceExhausted("dealer pool out of random masks");
    return make_mask(t_, mask_rng_, masks_used_++);
  }

 private:
  std::size_t t_;
  Rng triple_rng_;
  Rng mask_rng_;
  std::uint64_t triple_capacity_;
  std::uint64_t mask_capacity_;
  std::uint64_t triples_used_ = 0;
  std::uint64_t masks_used_ = 0;
};

// Materialized pools, for serialization to per-party files and for the
// small examples where an explicit offline phase is wanted.
struct DealerOutput {
  std::vector<BeaverTriple> triples;
  std::vector<RandomMask> masks;
};

inline DealerOutput dealer_generate(std::size_t t, std::uint64_t count_triples,
                                    std::uint64_t count_masks, Rng& rng) {
  DealerOutput out;
  out.triples.reserve(count_triples);
  out.masks.reserve(count_masks);
  for (std::uint64_t i = 0; i < count_triples; ++i)
    out.triples.push_back(make_triple(t, rng, i));
  for (std::uint64_t i = 0; i < count_masks; ++i)
    out.masks.push_back(make_mask(t, rng, i));
  return out;
}

// One secure multiplication: open d = x - a and e = y - b, then
// z = c + d*b + e*a + d*e reshared locally (the public d*e term rides on
// party 0). Exactly two openings, both uniformly masked.
inline ShareSet beaver_multiply(const ShareSet& x, const ShareSet& y,
                                BeaverTriple& triple, Transcript& transcript) {
  const std::size_t t = x.party_count();
  if (y.party_count() != t || triple.a.party_count() != t)
    throw std::invalid_argument("beaver_multiply: mismatched party counts");
  if (triple.consumed)
    throw ResourceReuse("beaver triple " + std::to_string(triple.id) +
                        " consumed twice");
  triple.consumed = true;

  FieldElement d, e;
  for (std::size_t i = 0; i < t; ++i) {
    d += x[i] - triple.a[i];
    e += y[i] - triple.b[i];
  }
  transcript.note_exchange(t * (t - 1));
  transcript.note_multiplications(1);
  transcript.note_opening(OpeningKind::kBeaverD, d);
  transcript.note_opening(OpeningKind::kBeaverE, e);

  ShareSet z(t);
  for (std::size_t i = 0; i < t; ++i)
    z[i] = triple.c[i] + d * triple.b[i] + e * triple.a[i];
  z[0] += d * e;
  return z;
}

// Open r*x and report whether it is zero. For x != 0 the opened value is
// uniform over the nonzero field elements, so nothing beyond the boolean
// leaks. Consumes the mask and one triple (the product r*x itself needs
// correlated randomness).
inline bool masked_zero_test(const ShareSet& x, RandomMask& mask,
                             BeaverTriple& triple, Transcript& transcript) {
  if (mask.consumed)
    throw ResourceReuse("random mask " + std::to_string(mask.id) +
                        " consumed twice");
  mask.consumed = true;

  ShareSet masked = beaver_multiply(x, mask.r, triple, transcript);
  FieldElement opened = reconstruct(masked);
  transcript.note_exchange(x.party_count() * (x.party_count() - 1));
  transcript.note_opening(OpeningKind::kMaskedTest, opened);
  return opened.is_zero();
}

}  // namespace seagull
