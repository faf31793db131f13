#include "ccode/codetable.hpp"

#include <sstream>
#include <stdexcept>

namespace ccode {

CodeTable::CodeTable(int width, std::vector<Codeword> entries,
                     std::vector<uint32_t> inverse)
    : width_(width), entries_(std::move(entries)), inverse_(std::move(inverse)) {}

CodeTable CodeTable::from_entries(int width, std::vector<Codeword> entries) {
  if (width < 1 || width > kMaxWidth)
    throw std::out_of_range("table width must be in 1..16, got " +
                            std::to_string(width));
  const size_t expected = size_t{1} << width;
  if (entries.size() != expected)
    throw std::invalid_argument(
        "counting sequence of width " + std::to_string(width) + " needs " +
        std::to_string(expected) + " entries, got " +
        std::to_string(entries.size()));

  constexpr uint32_t kUnset = 0xFFFFFFFFu;
  std::vector<uint32_t> inverse(expected, kUnset);
  for (size_t j = 0; j < entries.size(); ++j) {
    const Codeword& cw = entries[j];
    if (cw.width() != width)
      throw std::invalid_argument("entry " + std::to_string(j) +
                                  " has width " + std::to_string(cw.width()) +
                                  ", expected " + std::to_string(width));
    if (inverse[cw.bits()] != kUnset)
      throw std::invalid_argument("duplicate codeword " + cw.to_string() +
                                  ": not a counting sequence");
    inverse[cw.bits()] = static_cast<uint32_t>(j);
  }
  return CodeTable(width, std::move(entries), std::move(inverse));
}

CodeTable CodeTable::from_values(int width, const std::vector<uint32_t>& values) {
  std::vector<Codeword> entries;
  entries.reserve(values.size());
  for (uint32_t v : values) entries.emplace_back(v, width);
  return from_entries(width, std::move(entries));
}

const Codeword& CodeTable::codeword_at(uint32_t value) const {
  if (value >= size())
    throw std::out_of_range("value " + std::to_string(value) +
                            " out of range for width " + std::to_string(width_));
  return entries_[value];
}

uint32_t CodeTable::value_of(const Codeword& cw) const {
  if (cw.width() != width_)
    throw std::invalid_argument("codeword width " + std::to_string(cw.width()) +
                                " does not match table width " +
                                std::to_string(width_));
  return inverse_[cw.bits()];
}

CodeTable natural_binary(int width) {
  if (width < 1 || width > kMaxWidth)
    throw std::out_of_range("width must be in 1..16, got " +
                            std::to_string(width));
  std::vector<Codeword> entries;
  entries.reserve(size_t{1} << width);
  for (uint32_t v = 0; v < (1u << width); ++v) entries.emplace_back(v, width);
  return CodeTable::from_entries(width, std::move(entries));
}

std::string to_csv(const CodeTable& table) {
  std::ostringstream out;
  for (uint32_t v = 0; v < table.size(); ++v)
    out << v << ',' << table.codeword_at(v).to_string() << '\n';
  return out.str();
}

}  // namespace ccode
