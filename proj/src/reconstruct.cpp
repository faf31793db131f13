#include "ccode/reconstruct.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ccode {

namespace {

uint32_t abs_diff(uint32_t a, uint32_t b) { return a > b ? a - b : b - a; }

}  // namespace

std::vector<Codeword> neighbors_within(const Codeword& cw, int radius) {
  if (radius < 0 || radius > cw.width())
    throw std::out_of_range("radius must be in 0..width, got " +
                            std::to_string(radius));

  std::vector<Codeword> result;
  for (int weight = 1; weight <= radius; ++weight) {
    // Gosper's hack: ascending enumeration of all masks with `weight` bits.
    uint32_t mask = (1u << weight) - 1u;
    const uint32_t limit = 1u << cw.width();
    while (mask < limit) {
      result.emplace_back(cw.bits() ^ mask, cw.width());
      const uint32_t c = mask & -mask;
      const uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

uint32_t reconstruct(const Codeword& decoded, uint32_t predicted,
                     const CodeTable& table,
                     const ReconstructionPolicy& policy) {
  if (decoded.width() != table.width())
    throw std::invalid_argument("decoded codeword width does not match table");
  if (predicted > table.max_value())
    throw std::out_of_range("predicted value out of range");

  bool have_best = false;
  uint32_t best_value = 0;
  auto consider = [&](const Codeword& candidate) {
    const uint32_t value = table.value_of(candidate);
    if (!have_best ||
        abs_diff(value, predicted) < abs_diff(best_value, predicted) ||
        (abs_diff(value, predicted) == abs_diff(best_value, predicted) &&
         value < best_value)) {
      best_value = value;
      have_best = true;
    }
  };

  if (policy.include_center) consider(decoded);
  for (const Codeword& candidate : neighbors_within(decoded, policy.radius))
    consider(candidate);

  if (!have_best)
    throw std::invalid_argument(
        "empty candidate set: radius 0 with the center excluded");
  return best_value;
}

uint32_t threshold_reconstruct(uint32_t decoded_value, uint32_t predicted,
                               uint32_t threshold) {
  return abs_diff(decoded_value, predicted) > threshold ? predicted
                                                        : decoded_value;
}

}  // namespace ccode
