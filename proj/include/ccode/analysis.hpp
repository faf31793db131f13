#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ccode/codetable.hpp"

namespace ccode {

/// Exact rational, used so distance averages can be compared against bounds
/// like n - 1/2 with equality rather than a float tolerance.
using Rational = boost::rational<long long>;

/// Cyclic Hamming distances between entries k positions apart:
/// distances[j] = d(entries[(j+k) mod 2^n], entries[j]).
struct DistanceProfile {
  int k = 1;
  std::vector<int> distances;
};

/// Profile for neighbor offset k >= 0 (k = 0 gives all zeros).
DistanceProfile near_k_profile(const CodeTable& table, int k);

/// Mean of the cyclic near-1 profile, exact.
Rational average_hamming(const CodeTable& table);

/// Outcome of one structural check on a code table.
struct Verdict {
  std::string check;  // which law was checked
  int n = 0;          // code width
  bool pass = false;
  std::string details;
};

/// JSON record {"theorem": check, "n": n, "pass": pass, "details": details}.
nlohmann::ordered_json to_json(const Verdict& verdict);

/// The average near-1 Hamming distance of any counting sequence lies in
/// [1, n - 1/2]. Verifies the bounds and reports the exact average.
Verdict check_average_distance_bounds(const CodeTable& table);

/// Near-1 distance law of the counting code: every cyclic near-1 distance
/// is at least n-1, and is exactly n at indices p-1 and 2p-1 (the mirror
/// seam and the wraparound, p = 2^(n-1)) and exactly n-1 elsewhere.
Verdict check_near1_distance_law(const CodeTable& table);

/// Near-2 distance law of the counting code: the cyclic near-2 distance is
/// 1 exactly when k mod p is p-2 or p-1, and 2 otherwise, independent of
/// the width. Meaningful for width >= 3.
Verdict check_near2_distance_law(const CodeTable& table);

/// A counting sequence with a constant even near-1 distance cannot exist:
/// even-distance steps preserve codeword parity, so such a sequence could
/// visit at most half of all words. Checks the mechanism on random walks
/// whose steps flip an even number of bits: parity must stay constant and
/// the visited set must stay within 2^(n-1) words.
Verdict check_parity_invariant(int width, int walks, int steps_per_walk,
                               uint64_t seed);

/// Exhaustive search over every ordering of {0,...,2^n - 1} for one whose
/// cyclic near-1 distance is constantly `distance` (an even value in
/// 2..width). Returns the lexicographically first witness, or nullopt when
/// none exists. Feasible only for width 2 or 3; other widths throw
/// std::out_of_range, odd or out-of-range distances throw
/// std::invalid_argument.
std::optional<std::vector<uint32_t>> search_constant_even_near1(int width,
                                                                int distance);

/// CSV rows "value,codeword,d1,d2,..." with one distance column per
/// requested neighbor offset, no header.
std::string profile_csv(const CodeTable& table, const std::vector<int>& ks);

}  // namespace ccode
