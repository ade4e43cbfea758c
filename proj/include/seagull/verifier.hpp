#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "seagull/encode.hpp"
#include "seagull/engine.hpp"
#include "seagull/oblivious.hpp"
#include "seagull/trace_model.hpp"
#include "seagull/verdict.hpp"

namespace seagull {

namespace detail {

// Snapshot the public verdict data and run the VERDICT lockstep exchange;
// every party must arrive with identical numbers.
template <MpcEngine E>
Verdict finish_verdict(E& eng, bool result, std::uint32_t rounds_executed,
                       ExecutionMode mode) {
  const ObliviousTrace& t = eng.transcript().trace();
  std::uint64_t digest[6] = {result ? 1u : 0u, rounds_executed,
                             t.multiplications, t.openings,
                             t.messages,       t.rounds};
  eng.sync_verdict(std::span<const std::uint64_t>(digest, 6));
  Verdict v;
  v.result = result;
  v.rounds_executed = rounds_executed;
  v.trace = eng.transcript().trace();
  v.mode = mode;
  return v;
}

// One oblivious step over the table: next = sum_rows row.dst * <current, row.src>.
// All row matches go out in one exchange, all blends in a second; which row
// matched never influences the pattern.
template <MpcEngine E>
std::vector<typename E::Share> oblivious_next_hop(
    E& eng, const SharedFibT<typename E::Share>& fib,
    std::span<const typename E::Share> current) {
  using Share = typename E::Share;
  const std::size_t n = fib.n;
  const std::size_t m = fib.rows.size();

  std::vector<Share> lhs;
  std::vector<Share> rhs;
  lhs.reserve(m * n);
  rhs.reserve(m * n);
  for (const auto& row : fib.rows)
    for (std::size_t j = 0; j < n; ++j) {
      lhs.push_back(current[j]);
      rhs.push_back(row.src.components[j]);
    }
  std::vector<Share> products(m * n);
  eng.mul_batch(std::span<const Share>(lhs), std::span<const Share>(rhs),
                std::span<Share>(products));

  std::vector<Share> match(m, eng.constant(kZero));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j < n; ++j)
      match[r] = eng.add(match[r], products[r * n + j]);

  lhs.clear();
  rhs.clear();
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j < n; ++j) {
      lhs.push_back(match[r]);
      rhs.push_back(fib.rows[r].dst.components[j]);
    }
  std::vector<Share> blended(m * n);
  eng.mul_batch(std::span<const Share>(lhs), std::span<const Share>(rhs),
                std::span<Share>(blended));

  std::vector<Share> next(n, eng.constant(kZero));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j < n; ++j)
      next[j] = eng.add(next[j], blended[r * n + j]);
  return next;
}

}  // namespace detail

template <MpcEngine E>
struct LoopFreeOptions {
  ExecutionMode mode = ExecutionMode::kFixedRound;
  // 0 means the structural maximum n-1; smaller caps shorten deep chains at
  // the cost of misreporting them, so the default is the safe bound.
  std::uint32_t round_cap = 0;
  // Re-check V[row.src] before marking. Redundant on in-degree-1 reversed
  // graphs (the OR write is idempotent); kept as the comparison variant.
  bool revisit_guard = false;
  // Test hook: observes V after every round.
  std::function<void(std::uint32_t, const SharedBitVectorT<typename E::Share>&)>
      observer;
};

// Algorithm: mark the destination, then repeatedly mark every row source
// whose next hop is already marked; the table is loop-free iff all n nodes
// end up marked. Each round touches every row and every vector position, so
// the access pattern depends only on (n, rows, rounds).
template <MpcEngine E>
Verdict is_loop_free(E& eng, const SharedFibT<typename E::Share>& fib,
                     const LoopFreeOptions<E>& opt = {}) {
  using Share = typename E::Share;
  const std::size_t n = fib.n;
  const std::size_t m = fib.rows.size();
  const std::uint32_t max_rounds = n > 0 ? static_cast<std::uint32_t>(n - 1) : 0;
  const std::uint32_t cap =
      opt.round_cap == 0 ? max_rounds : std::min(opt.round_cap, max_rounds);

  TraceParams params{.t = eng.party_count(),
                     .n = n,
                     .rows = m,
                     .bound = cap,
                     .mode = opt.mode,
                     .revisit_guard = opt.revisit_guard};
  TraceExpectation need = worst_case_requirement(CheckKind::kLoopFree, params);
  eng.reserve(need.triples, need.masks);

  SharedBitVectorT<Share> visited = zero_bitvector(eng, n);
  visited.bits[fib.destination_index] = eng.constant(kOne);

  std::uint32_t executed = 0;
  for (std::uint32_t round = 0; round < cap; ++round) {
    ++executed;
    // Discover the whole frontier against the round-start V, then fold it
    // in. Row sources are distinct, so the write order is immaterial.
    std::vector<Share> marked_next;
    marked_next.reserve(m);
    for (const auto& row : fib.rows)
      marked_next.push_back(oblivious_read(eng, visited, row.dst));

    if (opt.revisit_guard) {
      for (std::size_t r = 0; r < m; ++r) {
        Share already = oblivious_read(eng, visited, fib.rows[r].src);
        Share fresh = eng.sub(eng.constant(kOne), already);
        Share gated;
        eng.mul_batch(std::span<const Share>(&marked_next[r], 1),
                      std::span<const Share>(&fresh, 1),
                      std::span<Share>(&gated, 1));
        marked_next[r] = gated;
      }
    }

    SharedBitVectorT<Share> before;
    if (opt.mode == ExecutionMode::kEarlyExit) before = visited;

    for (std::size_t r = 0; r < m; ++r)
      visited =
          oblivious_conditional_write(eng, visited, fib.rows[r].src,
                                      marked_next[r]);

    if (opt.observer) opt.observer(round, visited);

    if (opt.mode == ExecutionMode::kEarlyExit) {
      std::vector<Share> deltas(n);
      for (std::size_t j = 0; j < n; ++j)
        deltas[j] = eng.sub(visited.bits[j], before.bits[j]);
      bool frontier = frontier_flag(eng, std::span<const Share>(deltas));
      if (!eng.sync_flag(frontier)) break;
    }
  }

  Share total = eng.constant(kZero);
  for (const Share& bit : visited.bits) total = eng.add(total, bit);
  Share deficit = eng.sub(total, eng.constant(FieldElement(n)));
  bool result = eng.masked_zero_test(deficit);
  return detail::finish_verdict(eng, result, executed, opt.mode);
}

// Oblivious overwrite of the matching row's next hop:
// row.dst <- (1-m)*row.dst + m*new_dst with m = <row.src, upd.src>.
// Exactly one row changes under reconstruction; every row does the same
// work. Appending (a source with no row yet) is a public structural change.
template <MpcEngine E>
SharedFibT<typename E::Share> apply_update(
    E& eng, const SharedFibT<typename E::Share>& fib,
    const SharedUpdateT<typename E::Share>& update, bool append = false) {
  using Share = typename E::Share;
  if (update.src.size() != fib.n || update.new_dst.size() != fib.n)
    throw std::invalid_argument("apply_update: dimension mismatch");

  SharedFibT<Share> out = fib;
  if (append) {
    out.rows.push_back({update.src, update.new_dst});
    return out;
  }
  for (auto& row : out.rows) {
    Share m = inner_product(eng, std::span<const Share>(row.src.components),
                            std::span<const Share>(update.src.components));
    std::vector<Share> m_vec(fib.n, m);
    std::vector<Share> diff(fib.n);
    for (std::size_t j = 0; j < fib.n; ++j)
      diff[j] = eng.sub(update.new_dst.components[j], row.dst.components[j]);
    std::vector<Share> delta(fib.n);
    eng.mul_batch(std::span<const Share>(m_vec), std::span<const Share>(diff),
                  std::span<Share>(delta));
    for (std::size_t j = 0; j < fib.n; ++j)
      row.dst.components[j] = eng.add(row.dst.components[j], delta[j]);
  }
  return out;
}

namespace detail {

// Shared walk skeleton: start from `start`, take `bound` oblivious steps
// over the table, OR-accumulating arrival at destination (and optionally at
// a waypoint). Always exactly `bound` iterations.
template <MpcEngine E>
struct WalkOutcome {
  typename E::Share reached;
  typename E::Share hit_waypoint;
};

template <MpcEngine E>
WalkOutcome<E> oblivious_walk(E& eng, const SharedFibT<typename E::Share>& fib,
                              std::vector<typename E::Share> current,
                              std::size_t destination_index, HopBound bound,
                              const std::size_t* waypoint_index) {
  using Share = typename E::Share;
  WalkOutcome<E> out{current[destination_index], eng.constant(kZero)};
  if (waypoint_index) out.hit_waypoint = current[*waypoint_index];

  for (std::uint32_t step = 0; step < bound.value; ++step) {
    current = oblivious_next_hop(eng, fib, std::span<const Share>(current));
    out.reached = oblivious_or(eng, out.reached, current[destination_index]);
    if (waypoint_index)
      out.hit_waypoint =
          oblivious_or(eng, out.hit_waypoint, current[*waypoint_index]);
  }
  return out;
}

}  // namespace detail

// Simulates the post-update graph without committing it, walks from the
// updating AS, and accepts iff the destination is reached within the hop
// bound. The committed table is untouched; callers decide whether to adopt
// the hypothetical rows on a True verdict.
template <MpcEngine E>
struct IncrementalResult {
  Verdict verdict;
  SharedFibT<typename E::Share> hypothetical;  // adopt on True to commit
};

template <MpcEngine E>
IncrementalResult<E> incremental_check(
    E& eng, const SharedFibT<typename E::Share>& fib,
    const SharedUpdateT<typename E::Share>& update, HopBound bound,
    bool append = false) {
  using Share = typename E::Share;
  TraceParams params{.t = eng.party_count(),
                     .n = fib.n,
                     .rows = fib.rows.size(),
                     .bound = bound.value,
                     .append = append};
  TraceExpectation need =
      worst_case_requirement(CheckKind::kIncremental, params);
  eng.reserve(need.triples, need.masks);

  IncrementalResult<E> out{Verdict{}, apply_update(eng, fib, update, append)};

  std::vector<Share> start = update.src.components;
  auto walk = detail::oblivious_walk(eng, out.hypothetical, std::move(start),
                                     fib.destination_index, bound, nullptr);
  Share not_reached = eng.sub(eng.constant(kOne), walk.reached);
  bool safe = eng.masked_zero_test(not_reached);
  out.verdict = detail::finish_verdict(eng, safe, bound.value,
                                       ExecutionMode::kFixedRound);
  return out;
}

// Can `source` reach the session destination? The walk always performs
// exactly `bound` full-table scans, whatever the path does.
template <MpcEngine E>
Verdict check_reachability(E& eng, const SharedFibT<typename E::Share>& fib,
                           std::size_t source_index, std::size_t dest_index,
                           HopBound bound = HopBound{}) {
  using Share = typename E::Share;
  TraceParams params{.t = eng.party_count(),
                     .n = fib.n,
                     .rows = fib.rows.size(),
                     .bound = bound.value};
  TraceExpectation need =
      worst_case_requirement(CheckKind::kReachability, params);
  eng.reserve(need.triples, need.masks);

  auto start = onehot_of_public(eng, source_index, fib.n);
  auto walk = detail::oblivious_walk(eng, fib, std::move(start.components),
                                     dest_index, bound, nullptr);
  Share not_reached = eng.sub(eng.constant(kOne), walk.reached);
  bool reached = eng.masked_zero_test(not_reached);
  return detail::finish_verdict(eng, reached, bound.value,
                                ExecutionMode::kFixedRound);
}

// Does `waypoint` lie on the forwarding path from `source` to the
// destination? True requires both reaching the destination and meeting the
// waypoint along the way (the source itself counts).
template <MpcEngine E>
Verdict check_waypoint(E& eng, const SharedFibT<typename E::Share>& fib,
                       std::size_t source_index, std::size_t dest_index,
                       std::size_t waypoint_index,
                       HopBound bound = HopBound{}) {
  using Share = typename E::Share;
  TraceParams params{.t = eng.party_count(),
                     .n = fib.n,
                     .rows = fib.rows.size(),
                     .bound = bound.value};
  TraceExpectation need = worst_case_requirement(CheckKind::kWaypoint, params);
  eng.reserve(need.triples, need.masks);

  auto start = onehot_of_public(eng, source_index, fib.n);
  auto walk = detail::oblivious_walk(eng, fib, std::move(start.components),
                                     dest_index, bound, &waypoint_index);
  Share both;
  eng.mul_batch(std::span<const Share>(&walk.reached, 1),
                std::span<const Share>(&walk.hit_waypoint, 1),
                std::span<Share>(&both, 1));
  Share miss = eng.sub(eng.constant(kOne), both);
  bool ok = eng.masked_zero_test(miss);
  return detail::finish_verdict(eng, ok, bound.value,
                                ExecutionMode::kFixedRound);
}

// Prefix-origin check: count loopback rows, open whether the count is 0 or
// exactly 1, and only for a unique claimant open whether it matches the
// registry's authorized origin. More than one claimed origin is flagged as
// a potential hijack.
template <MpcEngine E>
Verdict check_origin_uniqueness(E& eng,
                                const SharedFibT<typename E::Share>& fib,
                                const SharedOneHotT<typename E::Share>& registry) {
  using Share = typename E::Share;
  if (registry.size() != fib.n)
    throw std::invalid_argument("check_origin_uniqueness: registry size");
  TraceParams params{.t = eng.party_count(),
                     .n = fib.n,
                     .rows = fib.rows.size()};
  TraceExpectation need = worst_case_requirement(CheckKind::kOrigin, params);
  eng.reserve(need.triples, need.masks);

  // Self-loop bit per row, then the claimed-origin one-hot as the
  // bit-weighted sum of row sources.
  std::vector<Share> self_bits;
  self_bits.reserve(fib.rows.size());
  for (const auto& row : fib.rows)
    self_bits.push_back(
        inner_product(eng, std::span<const Share>(row.src.components),
                      std::span<const Share>(row.dst.components)));

  std::vector<Share> origin(fib.n, eng.constant(kZero));
  for (std::size_t r = 0; r < fib.rows.size(); ++r) {
    std::vector<Share> bit_vec(fib.n, self_bits[r]);
    std::vector<Share> weighted(fib.n);
    eng.mul_batch(std::span<const Share>(bit_vec),
                  std::span<const Share>(fib.rows[r].src.components),
                  std::span<Share>(weighted));
    for (std::size_t j = 0; j < fib.n; ++j)
      origin[j] = eng.add(origin[j], weighted[j]);
  }

  Share count = eng.constant(kZero);
  for (const Share& b : self_bits) count = eng.add(count, b);
  Share match = inner_product(eng, std::span<const Share>(origin),
                              std::span<const Share>(registry.components));

  bool no_origin = eng.masked_zero_test(count);
  bool unique =
      eng.masked_zero_test(eng.sub(count, eng.constant(kOne)));
  bool authorized = false;
  if (unique)
    authorized =
        eng.masked_zero_test(eng.sub(match, eng.constant(kOne)));

  Verdict v = detail::finish_verdict(eng, unique && authorized, 1,
                                     ExecutionMode::kFixedRound);
  v.origin_unique = unique;
  v.hijack_flagged = !no_origin && !unique;  // two or more claimed origins
  return v;
}

}  // namespace seagull
