#pragma once

#include <cstdint>
#include <vector>

#include "ccode/codetable.hpp"

namespace ccode {

/// How candidate codewords are gathered around a decoded word. Equidistant
/// candidate values resolve deterministically: smallest absolute difference
/// to the prediction first, then the smaller pixel value (values are unique
/// per candidate, so no further tie is possible).
struct ReconstructionPolicy {
  int radius = 1;             // Hamming-ball radius for candidates
  bool include_center = true; // the decoded word itself competes
};

/// All codewords at Hamming distance 1..radius from `cw`, in ascending
/// numeric order; the center is excluded. Throws std::out_of_range unless
/// 0 <= radius <= width.
std::vector<Codeword> neighbors_within(const Codeword& cw, int radius);

/// Prediction-guided reconstruction: decode every candidate in the Hamming
/// ball around `decoded` and return the candidate value closest to
/// `predicted`. With the center included an uncorrupted decode that matches
/// the prediction is never displaced.
uint32_t reconstruct(const Codeword& decoded, uint32_t predicted,
                     const CodeTable& table,
                     const ReconstructionPolicy& policy = {});

/// Thresholding baseline: keep the decoded value unless it differs from the
/// prediction by more than `threshold`, in which case fall back to the
/// prediction.
uint32_t threshold_reconstruct(uint32_t decoded_value, uint32_t predicted,
                               uint32_t threshold);

}  // namespace ccode
