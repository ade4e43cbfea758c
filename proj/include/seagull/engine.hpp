#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <vector>

#include "seagull/dealer.hpp"
#include "seagull/shares.hpp"
#include "seagull/transcript.hpp"

namespace seagull {

// The verification algorithms are written once against this interface and
// instantiated twice: SimEngine executes all parties in one address space
// over full ShareSets (unit tests, bulk oracle-equivalence sweeps), and
// PartyEngine executes one party's arithmetic over a transport
// (party_runtime). Both count exchanges, messages and openings identically,
// which is what makes simulated and deployed transcripts comparable.
//
// Exchange granularity: one mul_batch or open_batch is one synchronized
// exchange (every party sends one message to every peer), one flag or
// verdict synchronization likewise.
template <typename E>
concept MpcEngine = requires(E e, const typename E::Share s, FieldElement c,
                             std::span<const typename E::Share> xs,
                             std::span<typename E::Share> out, bool b) {
  typename E::Share;
  { e.party_count() } -> std::convertible_to<std::size_t>;
  { e.constant(c) } -> std::same_as<typename E::Share>;
  { e.add(s, s) } -> std::same_as<typename E::Share>;
  { e.sub(s, s) } -> std::same_as<typename E::Share>;
  { e.scale(c, s) } -> std::same_as<typename E::Share>;
  { e.mul_batch(xs, xs, out) };
  { e.masked_zero_test(s) } -> std::same_as<bool>;
  { e.reserve(std::uint64_t{}, std::uint64_t{}) };
  { e.sync_flag(b) } -> std::same_as<bool>;
  { e.sync_verdict(std::span<const std::uint64_t>{}) };
  { e.transcript() } -> std::convertible_to<Transcript&>;
};

// All-parties-in-one-process engine. Values are complete ShareSets, triples
// come from a seeded dealer pool. The arithmetic is exactly the per-party
// protocol, just evaluated for every party in one loop.
class SimEngine {
 public:
  using Share = ShareSet;

  SimEngine(std::size_t t, DealerPool pool, bool record_openings = false)
      : t_(t), pool_(std::move(pool)), transcript_(record_openings) {}

  std::size_t party_count() const { return t_; }

  Share constant(FieldElement c) const {
    Share s(t_);
    s[0] = c;
    return s;
  }

  Share add(const Share& a, const Share& b) const {
    Share out(t_);
    for (std::size_t i = 0; i < t_; ++i) out[i] = a[i] + b[i];
    return out;
  }

  Share sub(const Share& a, const Share& b) const {
    Share out(t_);
    for (std::size_t i = 0; i < t_; ++i) out[i] = a[i] - b[i];
    return out;
  }

  Share scale(FieldElement c, const Share& a) const {
    Share out(t_);
    for (std::size_t i = 0; i < t_; ++i) out[i] = c * a[i];
    return out;
  }

  Share add_public(const Share& a, FieldElement c) const {
    Share out = a;
    out[0] += c;
    return out;
  }

  // k multiplications in one exchange: all 2k Beaver differences are opened
  // together.
  void mul_batch(std::span<const Share> xs, std::span<const Share> ys,
                 std::span<Share> out) {
    const std::size_t k = xs.size();
    transcript_.note_exchange(t_ * (t_ - 1));
    transcript_.note_multiplications(k);
    for (std::size_t j = 0; j < k; ++j) {
      BeaverTriple triple = pool_.next_triple();
      FieldElement d, e;
      for (std::size_t i = 0; i < t_; ++i) {
        d += xs[j][i] - triple.a[i];
        e += ys[j][i] - triple.b[i];
      }
      transcript_.note_opening(OpeningKind::kBeaverD, d);
      transcript_.note_opening(OpeningKind::kBeaverE, e);
      Share z(t_);
      for (std::size_t i = 0; i < t_; ++i)
        z[i] = triple.c[i] + d * triple.b[i] + e * triple.a[i];
      z[0] += d * e;
      out[j] = z;
    }
  }

  Share mul(const Share& x, const Share& y) {
    Share out;
    mul_batch({&x, 1}, {&y, 1}, {&out, 1});
    return out;
  }

  std::vector<FieldElement> open_batch(std::span<const Share> xs) {
    transcript_.note_exchange(t_ * (t_ - 1));
    std::vector<FieldElement> out;
    out.reserve(xs.size());
    for (const Share& x : xs) {
      FieldElement v = reconstruct(x);
      transcript_.note_opening(OpeningKind::kMaskedTest, v);
      out.push_back(v);
    }
    return out;
  }

  bool masked_zero_test(const Share& x) {
    RandomMask mask = pool_.next_mask();
    Share masked = mul(x, mask.r);
    return open_batch({&masked, 1})[0].is_zero();
  }

  void reserve(std::uint64_t triples, std::uint64_t masks) const {
    pool_.reserve(triples, masks);
  }

  // Public-bit lockstep exchanges. In simulation there is nothing to agree
  // on, but the message/round accounting must match the party runtime.
  bool sync_flag(bool flag) {
    transcript_.note_exchange(t_ * (t_ - 1));
    return flag;
  }

  void sync_verdict(std::span<const std::uint64_t> /*digest*/) {
    transcript_.note_exchange(t_ * (t_ - 1));
  }

  Transcript& transcript() { return transcript_; }

 private:
  std::size_t t_;
  DealerPool pool_;
  Transcript transcript_;
};

static_assert(MpcEngine<SimEngine>);

}  // namespace seagull
