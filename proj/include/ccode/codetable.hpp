#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccode/codeword.hpp"

namespace ccode {

/// An ordered sequence of all 2^n distinct n-bit codewords. The index of a
/// codeword is the pixel value it represents, so the table is the
/// value->codeword map and its inverse at once. Construction checks the
/// counting-sequence property (every n-bit word appears exactly once) and
/// precomputes the inverse, making encode and decode O(1).
///
/// Tables are immutable after construction and safe to share across threads.
class CodeTable {
 public:
  /// Throws std::invalid_argument unless `entries` holds exactly 2^width
  /// distinct width-bit codewords.
  static CodeTable from_entries(int width, std::vector<Codeword> entries);

  /// Convenience: build from raw values (entry j = Codeword(values[j], width)).
  static CodeTable from_values(int width, const std::vector<uint32_t>& values);

  int width() const { return width_; }
  uint32_t size() const { return static_cast<uint32_t>(entries_.size()); }
  uint32_t max_value() const { return size() - 1; }
  const std::vector<Codeword>& entries() const { return entries_; }

  /// Codeword representing `value`. Throws std::out_of_range for
  /// value >= 2^width.
  const Codeword& codeword_at(uint32_t value) const;

  /// The unique value whose codeword is `cw`. Total over all width-bit
  /// words; throws std::invalid_argument on width mismatch.
  uint32_t value_of(const Codeword& cw) const;

 private:
  CodeTable(int width, std::vector<Codeword> entries,
            std::vector<uint32_t> inverse);

  int width_;
  std::vector<Codeword> entries_;
  std::vector<uint32_t> inverse_;  // indexed by codeword bits
};

/// Identity mapping: value j is represented by the plain binary word j.
CodeTable natural_binary(int width);

/// CSV rows "value,codeword" with MSB-left width-n bit strings, one row per
/// value in order, no header.
std::string to_csv(const CodeTable& table);

}  // namespace ccode
