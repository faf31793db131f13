#include "ccode/pgm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <stdexcept>

namespace ccode {

namespace {

// Next integer token in the PGM header; '#' starts a comment to end of line.
int read_header_int(std::istream& in, const char* what) {
  for (;;) {
    int c = in.peek();
    if (c == EOF) throw std::runtime_error(std::string("pgm: missing ") + what);
    if (c == '#') {
      std::string line;
      std::getline(in, line);
      continue;
    }
    if (std::isspace(c)) {
      in.get();
      continue;
    }
    break;
  }
  int value = 0;
  if (!(in >> value))
    throw std::runtime_error(std::string("pgm: malformed ") + what);
  return value;
}

}  // namespace

PgmImage load_pgm(std::istream& in) {
  char p = 0, digit = 0;
  in >> p >> digit;
  if (!in || p != 'P' || (digit != '2' && digit != '5'))
    throw std::runtime_error("pgm: expected P2 or P5 magic");
  bool binary = digit == '5';

  PgmImage image;
  image.width = read_header_int(in, "width");
  image.height = read_header_int(in, "height");
  image.maxval = read_header_int(in, "maxval");
  if (image.width <= 0 || image.height <= 0)
    throw std::runtime_error("pgm: dimensions must be positive");
  if (image.maxval <= 0 || image.maxval > 255)
    throw std::runtime_error("pgm: only 8-bit images (maxval <= 255)");

  size_t count = static_cast<size_t>(image.width) *
                 static_cast<size_t>(image.height);
  image.pixels.reserve(count);
  if (binary) {
    in.get();  // single whitespace byte after maxval
    std::vector<char> raw(count);
    in.read(raw.data(), static_cast<std::streamsize>(count));
    if (static_cast<size_t>(in.gcount()) != count)
      throw std::runtime_error("pgm: truncated pixel data");
    for (char c : raw) image.pixels.push_back(static_cast<uint8_t>(c));
  } else {
    for (size_t i = 0; i < count; ++i) {
      int value = 0;
      if (!(in >> value))
        throw std::runtime_error("pgm: truncated pixel data");
      if (value < 0 || value > image.maxval)
        throw std::runtime_error("pgm: pixel out of range");
      image.pixels.push_back(static_cast<uint8_t>(value));
    }
  }
  return image;
}

PgmImage load_pgm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("pgm: cannot open " + path);
  return load_pgm(in);
}

std::vector<uint32_t> requantize(const PgmImage& image, int width) {
  if (width < 1) throw std::invalid_argument("requantize: width must be >= 1");
  int shift = width < 8 ? 8 - width : 0;
  std::vector<uint32_t> values;
  values.reserve(image.pixels.size());
  for (uint8_t p : image.pixels) values.push_back(uint32_t{p} >> shift);
  return values;
}

}  // namespace ccode
