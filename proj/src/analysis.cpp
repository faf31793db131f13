#include "ccode/analysis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "ccode/rng.hpp"

namespace ccode {

DistanceProfile near_k_profile(const CodeTable& table, int k) {
  if (k < 0) throw std::invalid_argument("neighbor offset must be >= 0");
  const auto& entries = table.entries();
  const size_t n = entries.size();
  DistanceProfile profile;
  profile.k = k;
  profile.distances.reserve(n);
  for (size_t j = 0; j < n; ++j)
    profile.distances.push_back(
        hamming(entries[(j + static_cast<size_t>(k)) % n], entries[j]));
  return profile;
}

Rational average_hamming(const CodeTable& table) {
  DistanceProfile near1 = near_k_profile(table, 1);
  long long sum = std::accumulate(near1.distances.begin(),
                                  near1.distances.end(), 0ll);
  return Rational(sum, static_cast<long long>(near1.distances.size()));
}

nlohmann::ordered_json to_json(const Verdict& verdict) {
  return nlohmann::ordered_json{{"theorem", verdict.check},
                                {"n", verdict.n},
                                {"pass", verdict.pass},
                                {"details", verdict.details}};
}

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream out;
  out << r.numerator();
  if (r.denominator() != 1) out << '/' << r.denominator();
  return out.str();
}

}  // namespace

Verdict check_average_distance_bounds(const CodeTable& table) {
  const int n = table.width();
  const Rational avg = average_hamming(table);
  const Rational lower(1);
  const Rational upper(2 * n - 1, 2);
  Verdict v;
  v.check = "average-distance-bounds";
  v.n = n;
  v.pass = lower <= avg && avg <= upper;
  v.details = "average " + rational_str(avg) + (v.pass ? " within [" : " outside [") +
              rational_str(lower) + ", " + rational_str(upper) + "]";
  return v;
}

Verdict check_near1_distance_law(const CodeTable& table) {
  const int n = table.width();
  const uint32_t size = table.size();
  const uint32_t half = size / 2;  // p
  DistanceProfile near1 = near_k_profile(table, 1);

  Verdict v;
  v.check = "near1-distance-law";
  v.n = n;
  v.pass = true;
  for (uint32_t j = 0; j < size; ++j) {
    const int expected = (j == half - 1 || j == size - 1) ? n : n - 1;
    if (near1.distances[j] != expected) {
      v.pass = false;
      v.details = "near-1 distance at index " + std::to_string(j) + " is " +
                  std::to_string(near1.distances[j]) + ", expected " +
                  std::to_string(expected);
      return v;
    }
  }
  v.details = "all near-1 distances >= " + std::to_string(n - 1) +
              ", equal to " + std::to_string(n) + " exactly at indices " +
              std::to_string(half - 1) + " and " + std::to_string(size - 1);
  return v;
}

Verdict check_near2_distance_law(const CodeTable& table) {
  const int n = table.width();
  const uint32_t size = table.size();
  const uint32_t half = size / 2;  // p
  DistanceProfile near2 = near_k_profile(table, 2);

  Verdict v;
  v.check = "near2-distance-law";
  v.n = n;
  v.pass = true;
  for (uint32_t j = 0; j < size; ++j) {
    const uint32_t r = j % half;
    const int expected = (r == half - 2 || r == half - 1) ? 1 : 2;
    if (near2.distances[j] != expected) {
      v.pass = false;
      v.details = "near-2 distance at index " + std::to_string(j) + " is " +
                  std::to_string(near2.distances[j]) + ", expected " +
                  std::to_string(expected);
      return v;
    }
  }
  v.details = "near-2 distance is 1 exactly where k mod " +
              std::to_string(half) + " is " + std::to_string(half - 2) +
              " or " + std::to_string(half - 1) + ", else 2";
  return v;
}

Verdict check_parity_invariant(int width, int walks, int steps_per_walk,
                               uint64_t seed) {
  if (width < 2 || width > kMaxWidth)
    throw std::out_of_range("width must be in 2..16, got " +
                            std::to_string(width));
  if (walks < 1 || steps_per_walk < 1)
    throw std::invalid_argument("walks and steps must be positive");

  const uint32_t mask_limit = 1u << width;
  const uint32_t half = mask_limit / 2;
  Verdict v;
  v.check = "even-step-parity";
  v.n = width;
  v.pass = true;

  for (int w = 0; w < walks; ++w) {
    SplitMix64 rng(substream_seed(seed, static_cast<uint64_t>(w)));
    uint32_t word = static_cast<uint32_t>(rng.next_below(mask_limit));
    const int start_parity = std::popcount(word) & 1;
    std::unordered_set<uint32_t> visited{word};
    for (int s = 0; s < steps_per_walk; ++s) {
      uint32_t step;
      do {
        step = static_cast<uint32_t>(rng.next_below(mask_limit));
      } while (std::popcount(step) % 2 != 0 || step == 0);
      word ^= step;
      visited.insert(word);
      if ((std::popcount(word) & 1) != start_parity) {
        v.pass = false;
        v.details = "walk " + std::to_string(w) + " changed parity at step " +
                    std::to_string(s);
        return v;
      }
    }
    if (visited.size() > half) {
      v.pass = false;
      v.details = "walk " + std::to_string(w) + " visited " +
                  std::to_string(visited.size()) + " words, more than 2^(n-1)";
      return v;
    }
  }
  v.details = std::to_string(walks) + " even-step walks of length " +
              std::to_string(steps_per_walk) +
              " kept parity constant and stayed within " +
              std::to_string(half) + " words";
  return v;
}

std::optional<std::vector<uint32_t>> search_constant_even_near1(int width,
                                                                int distance) {
  if (width != 2 && width != 3)
    throw std::out_of_range(
        "exhaustive search is feasible only for width 2 or 3, got " +
        std::to_string(width));
  if (distance % 2 != 0)
    throw std::invalid_argument("distance must be even, got " +
                                std::to_string(distance));
  if (distance < 2 || distance > width)
    throw std::invalid_argument("distance must be in 2..width, got " +
                                std::to_string(distance));

  const uint32_t size = 1u << width;
  std::vector<uint32_t> order(size);
  std::iota(order.begin(), order.end(), 0u);

  // std::next_permutation enumerates orderings in lexicographic order, so
  // the first hit is the lexicographically first witness.
  do {
    bool constant = true;
    for (uint32_t j = 0; j < size && constant; ++j)
      constant = std::popcount(order[(j + 1) % size] ^ order[j]) == distance;
    if (constant) return order;
  } while (std::next_permutation(order.begin(), order.end()));

  return std::nullopt;
}

std::string profile_csv(const CodeTable& table, const std::vector<int>& ks) {
  std::vector<DistanceProfile> profiles;
  profiles.reserve(ks.size());
  for (int k : ks) profiles.push_back(near_k_profile(table, k));

  std::ostringstream out;
  for (uint32_t v = 0; v < table.size(); ++v) {
    out << v << ',' << table.codeword_at(v).to_string();
    for (const auto& profile : profiles) out << ',' << profile.distances[v];
    out << '\n';
  }
  return out.str();
}

}  // namespace ccode
