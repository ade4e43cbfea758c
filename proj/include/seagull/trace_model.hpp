#pragma once

#include <cstdint>

#include "seagull/verdict.hpp"

namespace seagull {

// Closed-form predictions of every transcript counter, derived from public
// dimensions only. The verifier uses them twice: to reserve dealer
// resources before round one, and in the audit that asserts the instrumented
// counts match (the checkable form of data-obliviousness).
struct TraceExpectation {
  std::uint64_t multiplications = 0;
  std::uint64_t openings = 0;
  std::uint64_t messages = 0;
  std::uint64_t rounds = 0;  // communication exchanges
  std::uint64_t triples = 0;
  std::uint64_t masks = 0;

  friend bool operator==(const TraceExpectation&,
                         const TraceExpectation&) = default;

  bool matches(const ObliviousTrace& trace) const {
    return trace.multiplications == multiplications &&
           trace.openings == openings && trace.messages == messages &&
           trace.rounds == rounds;
  }
};

struct TraceParams {
  std::size_t t = 3;
  std::size_t n = 0;     // node universe size
  std::size_t rows = 0;  // FIB row count (pre-update for incremental)
  std::uint32_t bound = 0;  // scan rounds (loop_free) or walk steps
  ExecutionMode mode = ExecutionMode::kFixedRound;
  bool revisit_guard = false;  // loop_free variant with the V[src]=0 check
  bool append = false;         // incremental/apply: new row instead of blend
  bool origin_unique = true;   // origin: whether the third test was opened
};

TraceExpectation predict_trace(CheckKind kind, const TraceParams& params);

// For early-exit the executed round count is data-dependent; the reserve
// step must cover the worst case allowed by the cap.
TraceExpectation worst_case_requirement(CheckKind kind,
                                        const TraceParams& params);

}  // namespace seagull
