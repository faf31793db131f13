#pragma once

#include "ccode/codetable.hpp"

namespace ccode {

/// Intermediate sequences of the counting-code construction. The final code
/// of width n is derived from the reflected Gray code of width n-1 in three
/// steps: mirror (append the sequence reversed), complement every codeword
/// at an odd index of the doubled sequence, then prepend the alternating
/// prefix bits 0,1,0,1,...
struct CountingBuildTrace {
  std::vector<Codeword> gray_seed;    // width n-1, length p = 2^(n-1)
  std::vector<Codeword> mirrored;     // width n-1, length 2p
  std::vector<Codeword> complemented; // width n-1, odd indices complemented
  std::vector<Codeword> prefixed;     // width n, the finished code
};

/// Runs the construction and keeps every intermediate sequence.
/// Throws std::out_of_range for width outside 2..16 (width 2 is the
/// smallest with a Gray seed).
CountingBuildTrace trace_counting_build(int width);

/// The counting code of the given width as a value->codeword table.
CodeTable generate_counting(int width);

/// Codeword representing `value` under `table`.
inline Codeword encode(uint32_t value, const CodeTable& table) {
  return table.codeword_at(value);
}

/// The value represented by `cw` under `table`; inverse of encode.
inline uint32_t decode(const Codeword& cw, const CodeTable& table) {
  return table.value_of(cw);
}

}  // namespace ccode
