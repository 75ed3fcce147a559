#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bm {

// Oriented edge labels: horizontal letters print as a1, a2, ...; vertical
// letters as b1, b2, ...; an uppercase initial (A1, B2) marks the inverse.
enum class Axis : std::uint8_t { Horizontal = 0, Vertical = 1 };

// Packed into 16 bits so that raw code order is the module-wide letter order:
// horizontal before vertical, then by index, non-inverted before inverted
// (a1 < A1 < a2 < A2 < ... < b1 < B1 < ...).
class Letter {
 public:
  static constexpr int kMaxIndex = 2048;

  constexpr Letter() = default;  // a1

  constexpr Letter(Axis axis, int index, bool inverted = false)
      : code_(static_cast<std::uint16_t>(
            (static_cast<unsigned>(axis) << 12) |
            (static_cast<unsigned>(check_index(index) - 1) << 1) |
            static_cast<unsigned>(inverted))) {}

  static constexpr Letter horizontal(int index, bool inverted = false) {
    return Letter(Axis::Horizontal, index, inverted);
  }
  static constexpr Letter vertical(int index, bool inverted = false) {
    return Letter(Axis::Vertical, index, inverted);
  }

  constexpr Axis axis() const { return static_cast<Axis>(code_ >> 12); }
  constexpr int index() const { return ((code_ >> 1) & 0x7ff) + 1; }
  constexpr bool inverted() const { return (code_ & 1) != 0; }
  constexpr bool is_horizontal() const { return axis() == Axis::Horizontal; }
  constexpr bool is_vertical() const { return axis() == Axis::Vertical; }

  // Flips only the orientation bit; an involution.
  constexpr Letter inverse() const {
    return from_code(static_cast<std::uint16_t>(code_ ^ 1u));
  }
  constexpr Letter positive() const {
    return from_code(static_cast<std::uint16_t>(code_ & ~1u));
  }

  // 0-based slot among the 2n letters of one axis; respects the letter order.
  constexpr int dense() const { return code_ & 0xfff; }

  constexpr std::uint16_t code() const { return code_; }
  static constexpr Letter from_code(std::uint16_t code) {
    Letter x;
    x.code_ = code;
    return x;
  }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  static constexpr int check_index(int index) {
    if (index < 1 || index > kMaxIndex)
      throw std::out_of_range("letter index out of range");
    return index;
  }

  std::uint16_t code_ = 0;
};

// True when the letter's index fits the ambient (alpha horizontal, beta
// vertical generators).
constexpr bool in_ambient(Letter x, int alpha, int beta) {
  return x.index() <= (x.is_horizontal() ? alpha : beta);
}

std::string to_string(Letter x);

// Parses "a3" / "A3" / "b2" / "B12"; throws ParseError on anything else.
Letter parse_letter(std::string_view text);

}  // namespace bm
