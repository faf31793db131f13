#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ccode {

inline constexpr int kMaxWidth = 16;

/// An n-bit binary word, 1 <= n <= 16. Bit positions are counted 1..n from
/// the right; the rightmost bit is least significant, so `bits` doubles as
/// the numeric value of the word. Leading zeros are significant: a width-4
/// word 0001 is distinct from the width-3 word 001.
class Codeword {
 public:
  Codeword(uint32_t bits, int width) : bits_(bits), width_(width) {
    if (width < 1 || width > kMaxWidth)
      throw std::out_of_range("codeword width must be in 1..16, got " +
                              std::to_string(width));
    if (bits >> width != 0)
      throw std::out_of_range("codeword value " + std::to_string(bits) +
                              " does not fit in " + std::to_string(width) +
                              " bits");
  }

  uint32_t bits() const { return bits_; }
  int width() const { return width_; }
  uint32_t mask() const { return (1u << width_) - 1u; }

  /// Bitwise complement within the word's width. Involution.
  Codeword complement() const { return Codeword(~bits_ & mask(), width_); }

  /// Same word with an extra bit prepended on the most significant side.
  Codeword with_prefix(int prefix_bit) const {
    return Codeword(bits_ | (static_cast<uint32_t>(prefix_bit) << width_),
                    width_ + 1);
  }

  /// MSB-left bit string, e.g. Codeword(11, 4) -> "1011".
  std::string to_string() const {
    std::string s(static_cast<size_t>(width_), '0');
    for (int i = 0; i < width_; ++i)
      if (bits_ >> i & 1u) s[static_cast<size_t>(width_ - 1 - i)] = '1';
    return s;
  }

  friend auto operator<=>(const Codeword&, const Codeword&) = default;

 private:
  uint32_t bits_;
  int width_;
};

/// Parse an MSB-left bit string such as "1011" into a codeword whose width
/// is the string length.
inline Codeword parse_codeword(const std::string& s) {
  if (s.empty() || s.size() > kMaxWidth)
    throw std::invalid_argument("bit string must have 1..16 characters");
  uint32_t bits = 0;
  for (char c : s) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("bit string may contain only 0 and 1: " + s);
    bits = bits << 1 | static_cast<uint32_t>(c - '0');
  }
  return Codeword(bits, static_cast<int>(s.size()));
}

/// Number of bit positions in which two equal-width words differ.
inline int hamming(const Codeword& a, const Codeword& b) {
  if (a.width() != b.width())
    throw std::invalid_argument("hamming distance requires equal widths");
  return std::popcount(a.bits() ^ b.bits());
}

/// Parity of a word: number of one bits mod 2.
inline int parity(const Codeword& cw) { return std::popcount(cw.bits()) & 1; }

}  // namespace ccode
