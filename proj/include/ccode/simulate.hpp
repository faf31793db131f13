#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "ccode/codetable.hpp"
#include "ccode/rng.hpp"

namespace ccode {

/// Side-information predictor: the decoder's preliminary estimate of the
/// original value. Offsets are sampled around the original and the result
/// is clamped to the pixel range.
struct PredictionModel {
  enum class Kind { exact, uniform_offset, discrete_laplacian };
  Kind kind = Kind::exact;
  double scale = 0.0;  // offset bound (uniform) or Laplacian scale b
};

/// Mis-correction channel: bit errors injected into the decoded codeword.
/// Either every bit flips independently with probability p_flip, or a flip
/// count is drawn from `flip_count_weights` (index = count) and that many
/// distinct positions flip.
struct ChannelModel {
  enum class Kind { iid_bitflip, at_most_m_flips };
  Kind kind = Kind::iid_bitflip;
  double p_flip = 0.0;
  std::vector<double> flip_count_weights;
};

enum class Mapping { binary, gray, counting };
enum class Strategy { threshold, neighborhood };

/// One value->bits remapping paired with one reconstruction strategy.
struct Scheme {
  Mapping mapping = Mapping::binary;
  Strategy strategy = Strategy::threshold;
};

std::string scheme_id(const Scheme& scheme);   // e.g. "counting+neighborhood"
Scheme parse_scheme(const std::string& id);    // inverse of scheme_id

/// Invalid configuration; `field()` names the offending config field.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& problem)
      : std::runtime_error(field + ": " + problem), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct SimulationConfig {
  int width = 8;
  uint64_t trials = 100000;
  uint64_t seed = 1;
  PredictionModel prediction;
  ChannelModel channel;
  int radius = 1;            // neighborhood strategy
  bool include_center = true;
  uint32_t threshold = 2;    // thresholding strategy; deviations beyond one
                             // prediction-scale unit count as mis-corrections
  std::vector<Scheme> schemes;         // empty = every mapping x strategy
  std::vector<uint32_t> source_values; // empty = uniform originals
  int threads = 1;                     // 0 = hardware concurrency
};

/// Throws ConfigError naming the first invalid field.
void validate(const SimulationConfig& config);

/// Per-scheme accumulators. Error sums are exact integers; floating point
/// enters only in the derived metrics, so accumulation order cannot change
/// the report.
struct SchemeResult {
  Scheme scheme;
  uint64_t trials = 0;
  uint64_t squared_error_sum = 0;
  uint64_t exact_recoveries = 0;
  uint64_t worse_than_prediction = 0;  // output farther from the original
                                       // than the prediction was

  double mse() const;
  double psnr_db(uint32_t maxval) const;
  double exact_recovery_rate() const;
  double worse_than_prediction_rate() const;
};

struct SimulationReport {
  SimulationConfig config;
  std::vector<SchemeResult> results;

  nlohmann::ordered_json to_json() const;
  std::string to_text_table() const;
};

/// 10*log10(maxval^2 / mse) in decibels; +infinity when mse is zero.
/// Negative mse or non-positive maxval throw std::invalid_argument.
double psnr(double mse, double maxval);

/// Sampled prediction offset before clamping (exact gives 0, uniform draws
/// from [-scale, scale], discrete Laplacian from the two-sided geometric
/// with the given scale).
int sample_prediction_offset(const PredictionModel& model, SplitMix64& rng);

/// original + sampled offset, clamped to 0..2^width - 1.
uint32_t predict(uint32_t original, const PredictionModel& model, int width,
                 SplitMix64& rng);

/// Error pattern for one trial; XOR-ing it onto a codeword applies the
/// channel. Drawn once per trial so every mapping sees the same pattern.
uint32_t sample_flip_mask(const ChannelModel& channel, int width,
                          SplitMix64& rng);

/// `cw` with channel errors applied.
Codeword flip_bits(const Codeword& cw, const ChannelModel& channel,
                   SplitMix64& rng);

/// One deterministic pipeline pass: encode the original under `table`,
/// apply the flip mask, reconstruct per the scheme's strategy. Exposed so
/// single trials can be replayed with fixed values.
uint32_t run_trial_output(uint32_t original, uint32_t predicted,
                          uint32_t flip_mask, const CodeTable& table,
                          const Scheme& scheme, const SimulationConfig& config);

/// Monte-Carlo run over config.trials paired trials. Originals, predictions
/// and flip masks are drawn per trial from a substream of the master seed
/// and shared across schemes, so scheme comparisons are paired and the
/// report is byte-identical for a fixed config regardless of thread count.
SimulationReport run_simulation(const SimulationConfig& config);

}  // namespace ccode
