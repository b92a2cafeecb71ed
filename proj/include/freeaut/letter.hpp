#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace freeaut {

/// Largest rank accepted anywhere in the library. Letter codes fit in a byte
/// and Whitehead cut sets fit in a 64-bit mask.
inline constexpr int kMaxRank = 32;

/// A generator x_i or its inverse, packed as 2*(i-1) + (inverted ? 1 : 0).
///
/// The packing fixes the total letter order used for canonical rotations:
/// x1 < x1^-1 < x2 < x2^-1 < ...
class Letter {
 public:
  constexpr Letter() = default;

  static constexpr Letter from_code(std::uint8_t code) noexcept {
    Letter l;
    l.code_ = code;
    return l;
  }

  /// `index` is 1-based.
  static constexpr Letter make(int index, bool inverted = false) noexcept {
    return from_code(static_cast<std::uint8_t>(2 * (index - 1) + (inverted ? 1 : 0)));
  }

  constexpr std::uint8_t code() const noexcept { return code_; }
  constexpr int index() const noexcept { return code_ / 2 + 1; }
  constexpr bool inverted() const noexcept { return (code_ & 1U) != 0; }
  constexpr int sign() const noexcept { return inverted() ? -1 : 1; }
  constexpr Letter inverse() const noexcept {
    return from_code(static_cast<std::uint8_t>(code_ ^ 1U));
  }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint8_t code_ = 0;
};

/// "x3" or "x3^-1".
std::string to_string(Letter l);

}  // namespace freeaut
