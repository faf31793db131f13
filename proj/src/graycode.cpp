#include "ccode/graycode.hpp"

#include <stdexcept>

namespace ccode {

CodeTable generate_gray(int width) {
  if (width < 1 || width > kMaxWidth)
    throw std::out_of_range("gray code width must be in 1..16, got " +
                            std::to_string(width));

  std::vector<Codeword> seq = {Codeword(0, 1), Codeword(1, 1)};
  for (int w = 2; w <= width; ++w) {
    std::vector<Codeword> next;
    next.reserve(seq.size() * 2);
    for (const Codeword& cw : seq) next.push_back(cw.with_prefix(0));
    for (auto it = seq.rbegin(); it != seq.rend(); ++it)
      next.push_back(it->with_prefix(1));
    seq = std::move(next);
  }
  return CodeTable::from_entries(width, std::move(seq));
}

bool is_cyclic_gray(const CodeTable& table) {
  const auto& entries = table.entries();
  const size_t n = entries.size();
  for (size_t j = 0; j < n; ++j)
    if (hamming(entries[(j + 1) % n], entries[j]) != 1) return false;
  return true;
}

}  // namespace ccode
