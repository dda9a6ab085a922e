#include "aztec/bar_state.hpp"

#include <stdexcept>

namespace aztec {

BarState::BarState(std::uint64_t bits, int length) : bits_(bits), length_(length) {
  if (length < 0 || length > kMaxLength) {
    throw std::invalid_argument("bar state length out of range: " + std::to_string(length));
  }
  if (bits >> length != 0) {
    throw std::invalid_argument("bar state bits exceed length " + std::to_string(length));
  }
}

BarState BarState::parse(std::string_view word) {
  if (word.size() > static_cast<std::size_t>(kMaxLength)) {
    throw std::invalid_argument("bar state word too long");
  }
  std::uint64_t bits = 0;
  for (const char letter : word) {
    bits <<= 1;
    if (letter == 'b') {
      bits |= 1U;
    } else if (letter != 'a') {
      throw std::invalid_argument(std::string("bar state letter must be 'a' or 'b', got '") +
                                  letter + "'");
    }
  }
  return BarState(bits, static_cast<int>(word.size()));
}

BarState BarState::from_index(std::uint64_t index, int length) {
  if (length < 0 || length > kMaxLength) {
    throw std::out_of_range("bar state length out of range: " + std::to_string(length));
  }
  const std::uint64_t count = std::uint64_t{1} << length;
  if (index < 1 || index > count) {
    throw std::out_of_range("ab-order index " + std::to_string(index) + " outside [1, " +
                            std::to_string(count) + "]");
  }
  return BarState(index - 1, length);
}

std::string BarState::word() const {
  std::string out(static_cast<std::size_t>(length_), 'a');
  for (int pos = 0; pos < length_; ++pos) {
    if ((bits_ >> (length_ - 1 - pos)) & 1U) out[pos] = 'b';
  }
  return out;
}

}  // namespace aztec
