#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "seagull/field.hpp"
#include "seagull/rng.hpp"

namespace seagull {

// Upper bound on the verifier party count. Shares live inline so the
// protocol hot path never allocates; deployments use t = 3.
inline constexpr std::size_t kMaxParties = 8;

// Additive sharing of one field element across t parties: the shares sum to
// the secret mod p, and any t-1 of them are jointly uniform.
class ShareSet {
 public:
  ShareSet() = default;

  explicit ShareSet(std::size_t t) : count_(check_count(t)) {}

  ShareSet(std::initializer_list<FieldElement> shares)
      : count_(check_count(shares.size())) {
    std::size_t i = 0;
    for (FieldElement s : shares) shares_[i++] = s;
  }

  std::size_t party_count() const { return count_; }

  FieldElement& operator[](std::size_t i) { return shares_[i]; }
  FieldElement operator[](std::size_t i) const { return shares_[i]; }

  std::span<const FieldElement> shares() const {
    return {shares_, count_};
  }

  friend bool operator==(const ShareSet& a, const ShareSet& b) {
    if (a.count_ != b.count_) return false;
    for (std::size_t i = 0; i < a.count_; ++i)
      if (a.shares_[i] != b.shares_[i]) return false;
    return true;
  }

 private:
  static std::size_t check_count(std::size_t t) {
    if (t < 2) throw std::invalid_argument("share: need at least 2 parties");
    if (t > kMaxParties)
      throw std::invalid_argument("share: party count exceeds supported cap");
    return t;
  }

  FieldElement shares_[kMaxParties];
  std::size_t count_ = 0;
};

// Split a secret into t additive shares: the first t-1 are uniform draws,
// the last absorbs the difference.
inline ShareSet share(FieldElement secret, std::size_t t, Rng& rng) {
  ShareSet out(t);
  FieldElement acc;
  for (std::size_t i = 0; i + 1 < t; ++i) {
    out[i] = rng.next_field();
    acc += out[i];
  }
  out[t - 1] = secret - acc;
  return out;
}

inline FieldElement reconstruct(const ShareSet& s) {
  if (s.party_count() < 2)
    throw std::invalid_argument("reconstruct: empty share set");
  FieldElement acc;
  for (std::size_t i = 0; i < s.party_count(); ++i) acc += s[i];
  return acc;
}

// Reconstruction from a claimed-complete collection of per-party shares.
// Refuses to guess when shares are missing: a strict subset of an additive
// sharing is indistinguishable from noise.
inline FieldElement reconstruct_from_parties(
    std::span<const FieldElement> collected, std::size_t declared_t) {
  if (collected.size() != declared_t)
    throw std::invalid_argument(
        "reconstruct: incomplete shares (" + std::to_string(collected.size()) +
        " of " + std::to_string(declared_t) + " parties)");
  FieldElement acc;
  for (FieldElement s : collected) acc += s;
  return acc;
}

// offset + sum(coeff_i * share_i), computed locally per party. Linearity of
// additive sharing: no communication, no randomness.
inline ShareSet linear_combine(
    std::span<const std::pair<FieldElement, const ShareSet*>> terms,
    FieldElement offset, std::size_t t) {
  ShareSet out(t);
  out[0] = offset;  // public constants ride on party 0's share
  for (const auto& [coeff, s] : terms) {
    if (s->party_count() != t)
      throw std::invalid_argument("linear_combine: mismatched party counts");
    for (std::size_t i = 0; i < t; ++i) out[i] += coeff * (*s)[i];
  }
  return out;
}

}  // namespace seagull
