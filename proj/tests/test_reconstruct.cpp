#include "doctest.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ccode/countingcode.hpp"
#include "ccode/reconstruct.hpp"

using namespace ccode;

namespace {

uint32_t abs_diff(uint32_t a, uint32_t b) { return a > b ? a - b : b - a; }

// Independent selection oracle: scan the whole word space in descending
// order (the library enumerates ascending) and apply the same tie rule.
uint32_t oracle_reconstruct(const Codeword& decoded, uint32_t predicted,
                            const CodeTable& table, int radius,
                            bool include_center) {
  bool found = false;
  uint32_t best_value = 0;
  for (int w = static_cast<int>(table.size()) - 1; w >= 0; --w) {
    uint32_t bits = static_cast<uint32_t>(w);
    int dist = std::popcount(bits ^ decoded.bits());
    if (dist > radius) continue;
    if (dist == 0 && !include_center) continue;
    uint32_t value = table.value_of(Codeword(bits, table.width()));
    if (!found ||
        abs_diff(value, predicted) < abs_diff(best_value, predicted) ||
        (abs_diff(value, predicted) == abs_diff(best_value, predicted) &&
         value < best_value)) {
      best_value = value;
      found = true;
    }
  }
  REQUIRE(found);
  return best_value;
}

}  // namespace

TEST_CASE("hamming ball around 1001, radius 1") {
  std::vector<Codeword> ball = neighbors_within(parse_codeword("1001"), 1);
  // ascending numeric order: 0001, 1000, 1011, 1101
  CHECK(ball == std::vector<Codeword>{parse_codeword("0001"),
                                      parse_codeword("1000"),
                                      parse_codeword("1011"),
                                      parse_codeword("1101")});

  CodeTable table = generate_counting(4);
  std::vector<uint32_t> values;
  for (const Codeword& cw : ball) values.push_back(decode(cw, table));
  std::sort(values.begin(), values.end());
  CHECK(values == std::vector<uint32_t>{3, 5, 7, 14});
}

TEST_CASE("hamming ball sizes and bounds") {
  Codeword cw = parse_codeword("1001");
  CHECK(neighbors_within(cw, 0).empty());
  CHECK(neighbors_within(cw, 2).size() == 10);  // C(4,1) + C(4,2)
  CHECK(neighbors_within(cw, 4).size() == 15);  // everything but the center
  CHECK_THROWS_AS(neighbors_within(cw, -1), std::out_of_range);
  CHECK_THROWS_AS(neighbors_within(cw, 5), std::out_of_range);
}

TEST_CASE("worked width-4 example: corrupted 1001 with prediction 8") {
  CodeTable table = generate_counting(4);
  CHECK(decode(parse_codeword("1001"), table) == 11);
  CHECK(reconstruct(parse_codeword("1001"), 8, table) == 7);
}

TEST_CASE("equidistant candidates resolve to the smaller value") {
  // prediction 4: candidate values {11, 14, 3, 7, 5}; 3 and 5 are both
  // one away, so the rule picks 3.
  CodeTable table = generate_counting(4);
  CHECK(reconstruct(parse_codeword("1001"), 4, table) == 3);
}

TEST_CASE("an uncorrupted decode at the predicted value is kept") {
  CodeTable table = generate_counting(4);
  for (uint32_t v = 0; v < table.size(); ++v)
    CHECK(reconstruct(encode(v, table), v, table) == v);
}

TEST_CASE("single-bit corruption is always repaired at exact predictions") {
  CodeTable table = generate_counting(4);
  for (uint32_t v = 0; v < table.size(); ++v) {
    Codeword sent = encode(v, table);
    for (int bit = 0; bit < 4; ++bit) {
      Codeword corrupted(sent.bits() ^ (1u << bit), 4);
      CHECK(reconstruct(corrupted, v, table) == v);
    }
  }
}

TEST_CASE("radius 0 keeps only the center; dropping it too is an error") {
  CodeTable table = generate_counting(4);
  Codeword decoded = parse_codeword("1001");
  CHECK(reconstruct(decoded, 0, table, {0, true}) == 11);
  CHECK_THROWS_AS(reconstruct(decoded, 0, table, {0, false}),
                  std::invalid_argument);
}

TEST_CASE("reconstruction agrees with a descending-scan oracle everywhere") {
  CodeTable table = generate_counting(4);
  for (int radius : {1, 2}) {
    for (bool include_center : {true, false}) {
      ReconstructionPolicy policy{radius, include_center};
      for (uint32_t bits = 0; bits < 16; ++bits) {
        Codeword decoded(bits, 4);
        for (uint32_t predicted = 0; predicted < 16; ++predicted)
          CHECK(reconstruct(decoded, predicted, table, policy) ==
                oracle_reconstruct(decoded, predicted, table, radius,
                                   include_center));
      }
    }
  }
}

TEST_CASE("reconstruction validates widths and prediction range") {
  CodeTable table = generate_counting(4);
  CHECK_THROWS_AS(reconstruct(parse_codeword("100"), 3, table),
                  std::invalid_argument);
  CHECK_THROWS_AS(reconstruct(parse_codeword("1001"), 16, table),
                  std::out_of_range);
}

TEST_CASE("thresholding keeps close decodes and reverts distant ones") {
  CHECK(threshold_reconstruct(11, 8, 1) == 8);
  CHECK(threshold_reconstruct(9, 8, 2) == 9);
  CHECK(threshold_reconstruct(10, 8, 2) == 10);  // boundary stays decoded
  CHECK(threshold_reconstruct(11, 8, 2) == 8);
  for (uint32_t v : {0u, 7u, 255u}) CHECK(threshold_reconstruct(v, v, 0) == v);
}
