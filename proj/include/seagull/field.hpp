#pragma once

#include <cstdint>
#include <functional>

namespace seagull {

// All secrets, shares and counters live in the prime field Z_p with
// p = 2^61 - 1. The Mersenne structure keeps reduction to shifts and adds,
// and the field is wide enough that AS numbers (< 2^32) and row/visit
// counters embed without wraparound.
inline constexpr std::uint64_t kFieldPrime = (std::uint64_t{1} << 61) - 1;

class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint64_t v) : value_(reduce64(v)) {}

  constexpr std::uint64_t value() const { return value_; }

  friend constexpr FieldElement operator+(FieldElement a, FieldElement b) {
    std::uint64_t s = a.value_ + b.value_;  // < 2^62, no overflow
    if (s >= kFieldPrime) s -= kFieldPrime;
    return from_reduced(s);
  }

  friend constexpr FieldElement operator-(FieldElement a, FieldElement b) {
    std::uint64_t s = a.value_ + kFieldPrime - b.value_;
    if (s >= kFieldPrime) s -= kFieldPrime;
    return from_reduced(s);
  }

  friend constexpr FieldElement operator*(FieldElement a, FieldElement b) {
    unsigned __int128 prod =
        static_cast<unsigned __int128>(a.value_) * b.value_;
    // Fold the 122-bit product around the Mersenne prime: x = hi*2^61 + lo
    // and 2^61 = 1 (mod p).
    std::uint64_t lo = static_cast<std::uint64_t>(prod) & kFieldPrime;
    std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
    std::uint64_t s = lo + hi;  // < 2^62
    s = (s & kFieldPrime) + (s >> 61);
    if (s >= kFieldPrime) s -= kFieldPrime;
    return from_reduced(s);
  }

  FieldElement& operator+=(FieldElement o) { return *this = *this + o; }
  FieldElement& operator-=(FieldElement o) { return *this = *this - o; }
  FieldElement& operator*=(FieldElement o) { return *this = *this * o; }

  constexpr FieldElement negated() const {
    return from_reduced(value_ ? kFieldPrime - value_ : 0);
  }

  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;

 private:
  static constexpr std::uint64_t reduce64(std::uint64_t v) {
    std::uint64_t s = (v & kFieldPrime) + (v >> 61);
    if (s >= kFieldPrime) s -= kFieldPrime;
    return s;
  }
  static constexpr FieldElement from_reduced(std::uint64_t v) {
    FieldElement e;
    e.value_ = v;
    return e;
  }

  std::uint64_t value_ = 0;
};

inline constexpr FieldElement kZero{};
inline constexpr FieldElement kOne{1};

}  // namespace seagull

template <>
struct std::hash<seagull::FieldElement> {
  std::size_t operator()(seagull::FieldElement e) const noexcept {
    return std::hash<std::uint64_t>{}(e.value());
  }
};
