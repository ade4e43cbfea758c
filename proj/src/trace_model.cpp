#include "seagull/trace_model.hpp"

#include <stdexcept>

namespace seagull {

namespace {

// Exchange granularity, mirrored from the engine ops:
//   mul_batch(k)    -> k mults, 2k openings, 1 exchange
//   masked_zero_test -> 1 mult, 3 openings, 2 exchanges, 1 mask
//   flag/verdict sync -> 1 exchange, no openings
struct Builder {
  TraceExpectation e;

  void mul_batch(std::uint64_t k) {
    e.multiplications += k;
    e.openings += 2 * k;
    e.triples += k;
    e.rounds += 1;
  }
  void zero_test() {
    mul_batch(1);
    e.openings += 1;
    e.rounds += 1;
    e.masks += 1;
  }
  void sync() { e.rounds += 1; }

  TraceExpectation finish(std::size_t t) {
    e.messages = static_cast<std::uint64_t>(t) * (t - 1) * e.rounds;
    return e;
  }
};

void add_loop_free_round(Builder& b, const TraceParams& p) {
  const std::uint64_t m = p.rows;
  const std::uint64_t n = p.n;
  for (std::uint64_t r = 0; r < m; ++r) b.mul_batch(n);  // read V[row.dst]
  if (p.revisit_guard) {
    for (std::uint64_t r = 0; r < m; ++r) b.mul_batch(n);  // read V[row.src]
    for (std::uint64_t r = 0; r < m; ++r) b.mul_batch(1);  // b = a*(1-s)
  }
  for (std::uint64_t r = 0; r < m; ++r) {  // conditional write into V[row.src]
    b.mul_batch(n);
    b.mul_batch(n);
  }
  if (p.mode == ExecutionMode::kEarlyExit) {
    b.zero_test();  // frontier emptiness
    b.sync();       // flag lockstep
  }
}

void add_walk_step(Builder& b, std::uint64_t rows, std::uint64_t n,
                   bool with_waypoint) {
  b.mul_batch(rows * n);  // match current against every row source
  b.mul_batch(rows * n);  // blend next-hop one-hots
  b.mul_batch(1);         // OR into the reached bit
  if (with_waypoint) b.mul_batch(1);  // OR into the waypoint-hit bit
}

void add_apply_update(Builder& b, const TraceParams& p) {
  if (p.append) return;  // public row append, no secure work
  for (std::uint64_t r = 0; r < p.rows; ++r) {
    b.mul_batch(p.n);  // match row source against update source
    b.mul_batch(p.n);  // blend replacement next-hop
  }
}

}  // namespace

TraceExpectation predict_trace(CheckKind kind, const TraceParams& p) {
  Builder b;
  switch (kind) {
    case CheckKind::kLoopFree: {
      for (std::uint32_t r = 0; r < p.bound; ++r) add_loop_free_round(b, p);
      b.zero_test();  // sum(V) == n
      b.sync();       // verdict
      break;
    }
    case CheckKind::kApplyUpdate: {
      add_apply_update(b, p);
      return b.finish(p.t);
    }
    case CheckKind::kIncremental: {
      add_apply_update(b, p);
      const std::uint64_t rows = p.rows + (p.append ? 1 : 0);
      for (std::uint32_t s = 0; s < p.bound; ++s)
        add_walk_step(b, rows, p.n, false);
      b.zero_test();  // 1 - reached == 0
      b.sync();
      break;
    }
    case CheckKind::kReachability: {
      for (std::uint32_t s = 0; s < p.bound; ++s)
        add_walk_step(b, p.rows, p.n, false);
      b.zero_test();
      b.sync();
      break;
    }
    case CheckKind::kWaypoint: {
      for (std::uint32_t s = 0; s < p.bound; ++s)
        add_walk_step(b, p.rows, p.n, true);
      b.mul_batch(1);  // reached AND hit
      b.zero_test();
      b.sync();
      break;
    }
    case CheckKind::kOrigin: {
      for (std::uint64_t r = 0; r < p.rows; ++r) b.mul_batch(p.n);  // self-loop bits
      for (std::uint64_t r = 0; r < p.rows; ++r) b.mul_batch(p.n);  // origin one-hot
      b.mul_batch(p.n);  // registry match
      b.zero_test();     // count == 0
      b.zero_test();     // count == 1
      if (p.origin_unique) b.zero_test();  // registry match == 1
      b.sync();
      break;
    }
    default:
      throw std::invalid_argument("predict_trace: unknown check kind");
  }
  return b.finish(p.t);
}

TraceExpectation worst_case_requirement(CheckKind kind, const TraceParams& p) {
  TraceParams worst = p;
  if (kind == CheckKind::kOrigin) worst.origin_unique = true;
  // Early-exit may stop sooner than the cap; the requirement covers the cap.
  return predict_trace(kind, worst);
}

}  // namespace seagull
