#include "seagull/wire.hpp"

#include <stdexcept>

#include "seagull/errors.hpp"

namespace seagull {

SessionId SessionId::random(Rng& rng) {
  SessionId id;
  for (std::size_t i = 0; i < id.bytes.size(); i += 8) {
    std::uint64_t word = rng.next_u64();
    for (std::size_t j = 0; j < 8; ++j)
      id.bytes[i + j] = static_cast<std::uint8_t>(word >> (8 * j));
  }
  return id;
}

SessionId SessionId::from_hex(const std::string& hex) {
  if (hex.size() != 32)
    throw std::invalid_argument("session id must be 32 hex digits");
  auto nibble = [](char c) -> std::uint8_t {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("session id has non-hex digit");
  };
  SessionId id;
  for (std::size_t i = 0; i < 16; ++i)
    id.bytes[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 |
                                            nibble(hex[2 * i + 1]));
  return id;
}

std::string SessionId::to_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(32);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

std::uint32_t read_u32_be(const std::uint8_t* data) {
  return static_cast<std::uint32_t>(data[0]) << 24 |
         static_cast<std::uint32_t>(data[1]) << 16 |
         static_cast<std::uint32_t>(data[2]) << 8 |
         static_cast<std::uint32_t>(data[3]);
}

void write_u32_be(std::vector<std::uint8_t>& out, std::uint32_t value) {
  out.push_back(static_cast<std::uint8_t>(value >> 24));
  out.push_back(static_cast<std::uint8_t>(value >> 16));
  out.push_back(static_cast<std::uint8_t>(value >> 8));
  out.push_back(static_cast<std::uint8_t>(value));
}

std::vector<std::uint8_t> encode_frame(const Frame& frame) {
  const std::size_t body = kFrameHeaderBytes + 8 * frame.payload.size();
  std::vector<std::uint8_t> out;
  out.reserve(4 + body);
  write_u32_be(out, static_cast<std::uint32_t>(body));
  out.insert(out.end(), frame.session.bytes.begin(), frame.session.bytes.end());
  write_u32_be(out, frame.round);
  out.push_back(static_cast<std::uint8_t>(frame.kind));
  write_u32_be(out, static_cast<std::uint32_t>(frame.payload.size()));
  for (FieldElement e : frame.payload) {
    std::uint64_t v = e.value();
    for (int i = 0; i < 8; ++i)  // little-endian payload words
      out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  return out;
}

Frame decode_frame_body(std::span<const std::uint8_t> body) {
  if (body.size() < kFrameHeaderBytes)
    throw ProtocolError("frame body shorter than header");
  Frame frame;
  std::copy(body.begin(), body.begin() + 16, frame.session.bytes.begin());
  frame.round = read_u32_be(body.data() + 16);
  std::uint8_t kind = body[20];
  if (kind < 1 || kind > 5) throw ProtocolError("unknown message kind");
  frame.kind = static_cast<MessageKind>(kind);
  std::uint32_t count = read_u32_be(body.data() + 21);
  if (body.size() != kFrameHeaderBytes + 8ull * count)
    throw ProtocolError("frame payload length mismatch");
  frame.payload.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint8_t* p = body.data() + kFrameHeaderBytes + 8ull * i;
    std::uint64_t v = 0;
    for (int j = 7; j >= 0; --j) v = v << 8 | p[j];
    if (v >= kFieldPrime) throw ProtocolError("payload element out of field");
    frame.payload.push_back(FieldElement(v));
  }
  return frame;
}

}  // namespace seagull
