#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace aztec {

enum class Letter : std::uint8_t { a = 0, b = 1 };

// A word over {a, b} describing the letters on one side of a bar of tiles.
//
// Words are read from the rightmost tile to the leftmost one, so the first
// letter belongs to the rightmost tile. Internally a -> 0 and b -> 1 with the
// first letter as the most significant bit, which makes the lexicographic
// (ab-)order coincide with numeric order. Equivalently, bit c holds the letter
// of the tile in column c counted from the left, starting at 0.
class BarState {
 public:
  static constexpr int kMaxLength = 62;

  BarState() = default;
  BarState(std::uint64_t bits, int length);

  // Throws std::invalid_argument on letters other than 'a'/'b' or words
  // longer than kMaxLength.
  static BarState parse(std::string_view word);

  // 1-based ab-order position; index 1 is the trivial word aa...a. Throws
  // std::out_of_range when index is outside [1, 2^length].
  static BarState from_index(std::uint64_t index, int length);

  std::uint64_t index() const noexcept { return bits_ + 1; }
  std::uint64_t bits() const noexcept { return bits_; }
  int length() const noexcept { return length_; }

  // Letter on the tile at 0-based column `col`, counted from the left.
  Letter at_column(int col) const noexcept {
    return static_cast<Letter>((bits_ >> col) & 1U);
  }

  bool is_trivial() const noexcept { return bits_ == 0; }

  std::string word() const;

  friend bool operator==(const BarState&, const BarState&) = default;

 private:
  std::uint64_t bits_ = 0;
  int length_ = 0;
};

// Free-function spellings of the ab-order bijection.
inline std::uint64_t state_index(const BarState& state) { return state.index(); }
inline BarState state_word(std::uint64_t index, int length) {
  return BarState::from_index(index, length);
}

}  // namespace aztec
