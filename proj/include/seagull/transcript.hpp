#pragma once

#include <cstdint>
#include <vector>

#include "seagull/field.hpp"

namespace seagull {

// Operation-count abstraction of the access pattern. For a data-oblivious
// run these counts are a function of the public dimensions only, never of
// the shared contents; the acceptance suite checks exactly that.
struct ObliviousTrace {
  std::uint64_t multiplications = 0;
  std::uint64_t openings = 0;  // individual field elements made public
  std::uint64_t messages = 0;  // protocol messages across all party pairs
  std::uint64_t rounds = 0;    // synchronized communication exchanges

  friend bool operator==(const ObliviousTrace&,
                         const ObliviousTrace&) = default;
};

enum class OpeningKind : std::uint8_t {
  kBeaverD,    // x - a from a Beaver multiplication
  kBeaverE,    // y - b from a Beaver multiplication
  kMaskedTest  // r * x from a masked zero-test
};

struct OpeningRecord {
  std::uint64_t round;
  OpeningKind kind;
  FieldElement value;
};

// Every value the protocol ever makes public flows through here. The
// counters are always on; the per-value log is optional because the large
// verification sweeps open billions of Beaver differences.
class Transcript {
 public:
  explicit Transcript(bool record_values = false)
      : record_values_(record_values) {}

  void note_exchange(std::uint64_t message_count) {
    ++trace_.rounds;
    trace_.messages += message_count;
  }

  void note_multiplications(std::uint64_t count) {
    trace_.multiplications += count;
  }

  void note_opening(OpeningKind kind, FieldElement value) {
    ++trace_.openings;
    if (record_values_)
      log_.push_back({trace_.rounds, kind, value});
  }

  const ObliviousTrace& trace() const { return trace_; }
  const std::vector<OpeningRecord>& openings() const { return log_; }
  bool recording() const { return record_values_; }

 private:
  bool record_values_;
  ObliviousTrace trace_;
  std::vector<OpeningRecord> log_;
};

}  // namespace seagull
