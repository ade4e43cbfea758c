#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "seagull/transcript.hpp"

namespace seagull {

// Fixed-round runs always execute the configured number of rounds, so the
// whole trace is a function of public dimensions. Early-exit stops when the
// frontier empties, which leaks the round count and nothing else; it is
// opt-in.
enum class ExecutionMode { kFixedRound, kEarlyExit };

inline std::string_view execution_mode_name(ExecutionMode mode) {
  return mode == ExecutionMode::kFixedRound ? "fixed-round" : "early-exit";
}

inline ExecutionMode execution_mode_from_name(std::string_view name) {
  if (name == "fixed-round" || name == "fixed") return ExecutionMode::kFixedRound;
  if (name == "early-exit" || name == "early") return ExecutionMode::kEarlyExit;
  throw std::invalid_argument("unknown execution mode '" + std::string(name) +
                              "'");
}

// Traversal limit for the path-walk queries. AS paths are short (a handful
// of hops on average), so 15 is a comfortable ceiling; anything longer is
// treated as unreachable.
struct HopBound {
  std::uint32_t value = 15;

  explicit HopBound(std::uint32_t v = 15) : value(v) {
    if (v < 1) throw std::invalid_argument("hop bound must be >= 1");
  }
};

enum class CheckKind {
  kLoopFree,
  kReachability,
  kWaypoint,
  kOrigin,
  kIncremental,
  kApplyUpdate  // not a query; used for trace composition
};

inline std::string_view check_kind_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::kLoopFree: return "loop_free";
    case CheckKind::kReachability: return "reachability";
    case CheckKind::kWaypoint: return "waypoint";
    case CheckKind::kOrigin: return "origin";
    case CheckKind::kIncremental: return "incremental";
    case CheckKind::kApplyUpdate: return "apply_update";
  }
  throw std::invalid_argument("unknown check kind");
}

inline CheckKind check_kind_from_name(std::string_view name) {
  if (name == "loop_free") return CheckKind::kLoopFree;
  if (name == "reachability") return CheckKind::kReachability;
  if (name == "waypoint") return CheckKind::kWaypoint;
  if (name == "origin") return CheckKind::kOrigin;
  if (name == "incremental") return CheckKind::kIncremental;
  throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

// Public outcome of one verification: the boolean, how many algorithm
// rounds ran, and the audited operation counts.
struct Verdict {
  bool result = false;
  std::uint32_t rounds_executed = 0;
  ObliviousTrace trace;
  ExecutionMode mode = ExecutionMode::kFixedRound;

  // Origin-check extras; these bits are public protocol outputs (each was
  // opened by a masked test).
  bool origin_unique = false;
  bool hijack_flagged = false;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace seagull
