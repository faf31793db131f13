#pragma once

#include "ccode/codetable.hpp"

namespace ccode {

/// Binary-reflected Gray code of the given width, built by iterated
/// reflection: start from (0,1); at each step append the sequence in
/// reverse, prefix the originals with 0 and the reversed copy with 1.
/// Throws std::out_of_range for width outside 1..16.
CodeTable generate_gray(int width);

/// True iff every cyclically adjacent pair of entries (including last->first)
/// differs in exactly one bit.
bool is_cyclic_gray(const CodeTable& table);

}  // namespace ccode
