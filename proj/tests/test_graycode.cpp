#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "ccode/graycode.hpp"

using namespace ccode;

namespace {

std::vector<std::string> code_strings(const CodeTable& table) {
  std::vector<std::string> out;
  for (const Codeword& cw : table.entries()) out.push_back(cw.to_string());
  return out;
}

}  // namespace

TEST_CASE("reflected Gray code, small widths by hand") {
  CHECK(code_strings(generate_gray(1)) == std::vector<std::string>{"0", "1"});
  CHECK(code_strings(generate_gray(2)) ==
        std::vector<std::string>{"00", "01", "11", "10"});
  CHECK(code_strings(generate_gray(3)) ==
        std::vector<std::string>{"000", "001", "011", "010", "110", "111",
                                 "101", "100"});
}

TEST_CASE("reflected Gray code agrees with the v xor (v>>1) closed form") {
  for (int n = 1; n <= 16; ++n) {
    CodeTable table = generate_gray(n);
    REQUIRE(table.size() == (1u << n));
    for (uint32_t v = 0; v < table.size(); ++v)
      CHECK(table.codeword_at(v).bits() == (v ^ (v >> 1)));
  }
}

TEST_CASE("every cyclically adjacent Gray pair differs in one bit") {
  for (int n = 1; n <= 12; ++n) CHECK(is_cyclic_gray(generate_gray(n)));
}

TEST_CASE("natural binary is not a cyclic Gray code beyond width 1") {
  CHECK(is_cyclic_gray(natural_binary(1)));
  CHECK_FALSE(is_cyclic_gray(natural_binary(2)));
  CHECK_FALSE(is_cyclic_gray(natural_binary(4)));
}

TEST_CASE("gray generation rejects out-of-range widths") {
  CHECK_THROWS_AS(generate_gray(0), std::out_of_range);
  CHECK_THROWS_AS(generate_gray(17), std::out_of_range);
}
