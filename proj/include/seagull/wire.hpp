#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "seagull/field.hpp"
#include "seagull/rng.hpp"

namespace seagull {

// Protocol message kinds exchanged between verifier parties (and between
// clients/dealer and parties during setup).
enum class MessageKind : std::uint8_t {
  kShareIngest = 1,     // FIB or update shares arriving at a party
  kOpenValue = 2,       // masked share openings of one exchange
  kFlag = 3,            // public early-exit continue/stop bit
  kVerdict = 4,         // public verdict digest for the agreement check
  kTripleDelivery = 5,  // dealer pool elements
};

struct SessionId {
  std::array<std::uint8_t, 16> bytes{};

  static SessionId random(Rng& rng);
  static SessionId from_hex(const std::string& hex);
  std::string to_hex() const;

  friend bool operator==(const SessionId&, const SessionId&) = default;
};

// Wire frame: 4-byte big-endian body length, then 16-byte session id,
// 4-byte big-endian round, 1-byte kind, 4-byte big-endian payload count and
// the payload as 8-byte little-endian field elements.
struct Frame {
  SessionId session;
  std::uint32_t round = 0;
  MessageKind kind = MessageKind::kOpenValue;
  std::vector<FieldElement> payload;

  friend bool operator==(const Frame&, const Frame&) = default;
};

inline constexpr std::size_t kFrameHeaderBytes = 16 + 4 + 1 + 4;

// Full encoding including the length prefix.
std::vector<std::uint8_t> encode_frame(const Frame& frame);

// Decodes a frame body (everything after the length prefix).
Frame decode_frame_body(std::span<const std::uint8_t> body);

// Length-prefix helpers for stream transports.
std::uint32_t read_u32_be(const std::uint8_t* data);
void write_u32_be(std::vector<std::uint8_t>& out, std::uint32_t value);

}  // namespace seagull
