#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seagull {

// Malformed input file; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")"
                                : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Violation of the round-lockstep protocol: bad frame, wrong round number,
// disagreeing verdicts, peer disconnect mid-round.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Beaver triple or random mask was consumed twice. Single-use correlated
// randomness is the soundness anchor of the masked openings, so reuse aborts
// the protocol.
class ResourceReuse : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};

// The dealer pool cannot cover the requested operation. Raised before the
// first communication round so that nothing partial leaks.
class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A query was refused without running any secure computation (e.g. a
// waypoint query past its privacy budget). Distinct from a False verdict.
class QueryRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Transcript counters diverge from the closed-form expectation.
class AuditError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace seagull
