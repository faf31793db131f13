// Acceptance gate for the counting-code artifact: one line per criterion,
// exit status 0 only if every criterion holds. Run via ctest or directly.
#include <algorithm>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ccode/analysis.hpp"
#include "ccode/countingcode.hpp"
#include "ccode/graycode.hpp"
#include "ccode/reconstruct.hpp"
#include "ccode/simulate.hpp"

using namespace ccode;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << index << ". " << name;
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << '\n';
  if (!ok) ++failures;
}

// 1. The width-4 table and both frozen distance columns, bit for bit.
void criterion_golden_table() {
  const std::vector<std::string> expected_code = {
      "0000", "1110", "0011", "1101", "0110", "1000", "0101", "1011",
      "0100", "1010", "0111", "1001", "0010", "1100", "0001", "1111"};
  const std::vector<int> expected_near1 = {3, 3, 3, 3, 3, 3, 3, 4,
                                           3, 3, 3, 3, 3, 3, 3, 4};
  const std::vector<int> expected_near2 = {2, 2, 2, 2, 2, 2, 1, 1,
                                           2, 2, 2, 2, 2, 2, 1, 1};
  CodeTable table = generate_counting(4);
  std::vector<std::string> code;
  for (const Codeword& cw : table.entries()) code.push_back(cw.to_string());
  bool ok = code == expected_code &&
            near_k_profile(table, 1).distances == expected_near1 &&
            near_k_profile(table, 2).distances == expected_near2;
  report(1, "width-4 table and distance columns match the frozen reference",
         ok);
}

// 2. The two intermediate stages of the width-4 construction.
void criterion_build_trace() {
  const std::vector<std::string> expected_mirrored = {
      "000", "001", "011", "010", "110", "111", "101", "100",
      "100", "101", "111", "110", "010", "011", "001", "000"};
  const std::vector<std::string> expected_complemented = {
      "000", "110", "011", "101", "110", "000", "101", "011",
      "100", "010", "111", "001", "010", "100", "001", "111"};
  CountingBuildTrace trace = trace_counting_build(4);
  auto to_strings = [](const std::vector<Codeword>& seq) {
    std::vector<std::string> out;
    for (const Codeword& cw : seq) out.push_back(cw.to_string());
    return out;
  };
  bool ok = to_strings(trace.mirrored) == expected_mirrored &&
            to_strings(trace.complemented) == expected_complemented;
  report(2, "width-4 mirror and complement stages match the frozen trace", ok);
}

// 3. The worked reconstruction example, end to end.
void criterion_worked_example() {
  CodeTable table = generate_counting(4);
  std::ostringstream why;
  bool ok = true;

  if (encode(7, table).to_string() != "1011") {
    ok = false;
    why << "encode(7) = " << encode(7, table).to_string() << "; ";
  }
  if (decode(parse_codeword("1001"), table) != 11) {
    ok = false;
    why << "decode(1001) = " << decode(parse_codeword("1001"), table) << "; ";
  }
  std::vector<Codeword> ball = neighbors_within(parse_codeword("1001"), 1);
  std::set<std::string> got, want = {"0001", "1101", "1011", "1000"};
  std::multiset<uint32_t> values, want_values = {14, 3, 7, 5};
  for (const Codeword& cw : ball) {
    got.insert(cw.to_string());
    values.insert(decode(cw, table));
  }
  if (got != want || values != want_values) {
    ok = false;
    why << "hamming ball mismatch; ";
  }
  if (reconstruct(parse_codeword("1001"), 8, table) != 7) {
    ok = false;
    why << "reconstruct(1001, 8) = "
        << reconstruct(parse_codeword("1001"), 8, table);
  }
  report(3, "worked example: 1001 with prediction 8 reconstructs to 7", ok,
         why.str());
}

// 4. Near-1 distances: n at the two seam indices, n-1 everywhere else.
void criterion_near1_law() {
  for (int n = 2; n <= 12; ++n) {
    CodeTable table = generate_counting(n);
    std::vector<int> profile = near_k_profile(table, 1).distances;
    uint32_t half = table.size() / 2;
    for (uint32_t j = 0; j < table.size(); ++j) {
      int expected = (j == half - 1 || j == table.size() - 1) ? n : n - 1;
      if (profile[j] < n - 1 || profile[j] != expected) {
        report(4, "near-1 distance law for widths 2..12", false,
               "width " + std::to_string(n) + " index " + std::to_string(j) +
                   ": distance " + std::to_string(profile[j]));
        return;
      }
    }
    if (!check_near1_distance_law(table).pass) {
      report(4, "near-1 distance law for widths 2..12", false,
             "verdict disagrees at width " + std::to_string(n));
      return;
    }
  }
  report(4, "near-1 distance law for widths 2..12", true);
}

// 5. Near-2 distances: 1 exactly at k mod p in {p-2, p-1}, else 2.
void criterion_near2_law() {
  for (int n = 3; n <= 12; ++n) {
    CodeTable table = generate_counting(n);
    std::vector<int> profile = near_k_profile(table, 2).distances;
    uint32_t p = table.size() / 2;
    for (uint32_t j = 0; j < table.size(); ++j) {
      uint32_t r = j % p;
      int expected = (r == p - 2 || r == p - 1) ? 1 : 2;
      if (profile[j] != expected) {
        report(5, "near-2 distance law for widths 3..12", false,
               "width " + std::to_string(n) + " index " + std::to_string(j) +
                   ": distance " + std::to_string(profile[j]));
        return;
      }
    }
    if (!check_near2_distance_law(table).pass) {
      report(5, "near-2 distance law for widths 3..12", false,
             "verdict disagrees at width " + std::to_string(n));
      return;
    }
  }
  report(5, "near-2 distance law for widths 3..12", true);
}

// 6. Exact average-distance bounds, the hand-checked maximal sequence, and
//    every width-2 ordering.
void criterion_average_bounds() {
  for (int n = 2; n <= 12; ++n) {
    CodeTable table = generate_counting(n);
    Rational avg = average_hamming(table);
    Rational upper(2 * n - 1, 2);
    if (avg < Rational(1) || avg > upper ||
        !check_average_distance_bounds(table).pass) {
      report(6, "exact average-distance bounds", false,
             "width " + std::to_string(n) + " average " +
                 std::to_string(avg.numerator()) + "/" +
                 std::to_string(avg.denominator()));
      return;
    }
  }
  CodeTable maximal = CodeTable::from_values(3, {0, 7, 1, 6, 3, 4, 2, 5});
  if (average_hamming(maximal) != Rational(5, 2)) {
    report(6, "exact average-distance bounds", false,
           "maximal width-3 sequence average is not exactly 5/2");
    return;
  }
  std::vector<uint32_t> values = {0, 1, 2, 3};
  do {
    CodeTable table = CodeTable::from_values(2, values);
    Rational avg = average_hamming(table);
    if (avg < Rational(1) || avg > Rational(3, 2)) {
      report(6, "exact average-distance bounds", false,
             "a width-2 ordering violates the bounds");
      return;
    }
  } while (std::next_permutation(values.begin(), values.end()));
  report(6, "exact average-distance bounds", true);
}

// 7. No counting sequence with a constant even step distance: exhaustive at
//    widths 2..3, parity mechanism on 10^4 random walks per width up to 8.
void criterion_even_distance_impossible() {
  if (search_constant_even_near1(2, 2) || search_constant_even_near1(3, 2)) {
    report(7, "constant even step distance is impossible", false,
           "exhaustive search produced a witness");
    return;
  }
  for (int n = 2; n <= 8; ++n) {
    Verdict v = check_parity_invariant(n, 10000, 64, 2026);
    if (!v.pass) {
      report(7, "constant even step distance is impossible", false,
             "parity walk failed at width " + std::to_string(n) + ": " +
                 v.details);
      return;
    }
  }
  report(7, "constant even step distance is impossible", true);
}

// 8. Counting property: every width visits all words once; decode inverts
//    encode.
void criterion_bijection() {
  for (int n = 2; n <= 16; ++n) {
    CodeTable table = generate_counting(n);
    if (table.size() != (1u << n)) {
      report(8, "bijection for widths 2..16", false,
             "width " + std::to_string(n) + " has wrong size");
      return;
    }
    std::vector<bool> seen(table.size(), false);
    for (const Codeword& cw : table.entries()) {
      if (seen[cw.bits()]) {
        report(8, "bijection for widths 2..16", false,
               "duplicate word at width " + std::to_string(n));
        return;
      }
      seen[cw.bits()] = true;
    }
    for (uint32_t v = 0; v < table.size(); ++v) {
      if (decode(encode(v, table), table) != v) {
        report(8, "bijection for widths 2..16", false,
               "decode(encode(" + std::to_string(v) + ")) mismatch at width " +
                   std::to_string(n));
        return;
      }
    }
  }
  report(8, "bijection for widths 2..16", true);
}

// 9. Ordering property of the pipeline: remapping + neighborhood
//    reconstruction strictly beats natural binary + thresholding on MSE and
//    exact recoveries, at two different seeds.
void criterion_simulation_ordering() {
  for (uint64_t seed : {uint64_t{101}, uint64_t{20260825}}) {
    SimulationConfig config;
    config.width = 8;
    config.trials = 100000;
    config.seed = seed;
    config.prediction.kind = PredictionModel::Kind::discrete_laplacian;
    config.prediction.scale = 2.0;
    config.channel.kind = ChannelModel::Kind::iid_bitflip;
    config.channel.p_flip = 0.02;
    config.radius = 1;
    config.schemes = {{Mapping::binary, Strategy::threshold},
                      {Mapping::counting, Strategy::neighborhood}};
    SimulationReport rep = run_simulation(config);
    const SchemeResult& baseline = rep.results[0];
    const SchemeResult& remapped = rep.results[1];
    if (!(remapped.squared_error_sum < baseline.squared_error_sum &&
          remapped.exact_recoveries > baseline.exact_recoveries)) {
      std::ostringstream why;
      why << "seed " << seed << ": mse " << remapped.mse() << " vs "
          << baseline.mse() << ", recoveries " << remapped.exact_recoveries
          << " vs " << baseline.exact_recoveries;
      report(9, "remapped neighborhood beats binary thresholding", false,
             why.str());
      return;
    }
  }
  report(9, "remapped neighborhood beats binary thresholding", true);
}

// 10. Byte-identical reports for identical config and seed.
void criterion_determinism() {
  SimulationConfig config;
  config.width = 8;
  config.trials = 10000;
  config.seed = 31337;
  config.prediction.kind = PredictionModel::Kind::discrete_laplacian;
  config.prediction.scale = 2.0;
  config.channel.p_flip = 0.02;

  std::string first = run_simulation(config).to_json().dump(2);
  std::string second = run_simulation(config).to_json().dump(2);
  config.threads = 4;
  std::string parallel = run_simulation(config).to_json().dump(2);
  bool ok = first == second && first == parallel;
  report(10, "simulation reports are byte-identical across reruns", ok);
}

}  // namespace

int main() {
  criterion_golden_table();
  criterion_build_trace();
  criterion_worked_example();
  criterion_near1_law();
  criterion_near2_law();
  criterion_average_bounds();
  criterion_even_distance_impossible();
  criterion_bijection();
  criterion_simulation_ordering();
  criterion_determinism();

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria satisfied\n";
  return 0;
}
