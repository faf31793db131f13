#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ccode {

/// 8-bit grayscale image as read from a PGM file.
struct PgmImage {
  int width = 0;
  int height = 0;
  int maxval = 255;
  std::vector<uint8_t> pixels;  // row-major, width*height entries
};

/// Reads a P2 (ASCII) or P5 (binary) PGM with maxval <= 255. '#' comments
/// in the header are skipped. Malformed input throws std::runtime_error.
PgmImage load_pgm(std::istream& in);
PgmImage load_pgm_file(const std::string& path);

/// Pixel values reduced to `width` bits by dropping low-order bits
/// (no-op when width >= 8). Suitable as simulation source values.
std::vector<uint32_t> requantize(const PgmImage& image, int width);

}  // namespace ccode
