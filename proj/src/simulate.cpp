#include "ccode/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "ccode/countingcode.hpp"
#include "ccode/graycode.hpp"
#include "ccode/reconstruct.hpp"

namespace ccode {

namespace {

const char* mapping_name(Mapping m) {
  switch (m) {
    case Mapping::binary: return "binary";
    case Mapping::gray: return "gray";
    case Mapping::counting: return "counting";
  }
  return "?";
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::threshold: return "threshold";
    case Strategy::neighborhood: return "neighborhood";
  }
  return "?";
}

const char* prediction_kind_name(PredictionModel::Kind k) {
  switch (k) {
    case PredictionModel::Kind::exact: return "exact";
    case PredictionModel::Kind::uniform_offset: return "uniform-offset";
    case PredictionModel::Kind::discrete_laplacian: return "discrete-laplacian";
  }
  return "?";
}

const char* channel_kind_name(ChannelModel::Kind k) {
  switch (k) {
    case ChannelModel::Kind::iid_bitflip: return "iid-bitflip";
    case ChannelModel::Kind::at_most_m_flips: return "at-most-m-flips";
  }
  return "?";
}

uint32_t abs_diff(uint32_t a, uint32_t b) { return a > b ? a - b : b - a; }

// Number of failures before the first success of a Bernoulli(1 - theta)
// process, i.e. P(G = k) = theta^k * (1 - theta).
int64_t sample_geometric(double theta, SplitMix64& rng) {
  if (theta <= 0.0) return 0;
  double u = rng.next_double();  // in [0, 1)
  return static_cast<int64_t>(std::floor(std::log1p(-u) / std::log(theta)));
}

std::vector<Scheme> resolve_schemes(const SimulationConfig& config) {
  if (!config.schemes.empty()) return config.schemes;
  std::vector<Scheme> all;
  for (Mapping m : {Mapping::binary, Mapping::gray, Mapping::counting})
    for (Strategy s : {Strategy::threshold, Strategy::neighborhood})
      all.push_back({m, s});
  return all;
}

const CodeTable& table_for(Mapping m, const CodeTable& binary,
                           const CodeTable& gray, const CodeTable& counting) {
  switch (m) {
    case Mapping::binary: return binary;
    case Mapping::gray: return gray;
    case Mapping::counting: return counting;
  }
  return binary;
}

std::string format_metric(double value) {
  std::ostringstream out;
  if (std::isinf(value))
    out << "inf";
  else
    out << std::fixed << std::setprecision(6) << value;
  return out.str();
}

}  // namespace

std::string scheme_id(const Scheme& scheme) {
  return std::string(mapping_name(scheme.mapping)) + "+" +
         strategy_name(scheme.strategy);
}

Scheme parse_scheme(const std::string& id) {
  auto plus = id.find('+');
  if (plus == std::string::npos)
    throw std::invalid_argument("scheme id must look like mapping+strategy: " +
                                id);
  std::string mapping = id.substr(0, plus);
  std::string strategy = id.substr(plus + 1);
  Scheme scheme;
  if (mapping == "binary")
    scheme.mapping = Mapping::binary;
  else if (mapping == "gray")
    scheme.mapping = Mapping::gray;
  else if (mapping == "counting")
    scheme.mapping = Mapping::counting;
  else
    throw std::invalid_argument("unknown mapping: " + mapping);
  if (strategy == "threshold")
    scheme.strategy = Strategy::threshold;
  else if (strategy == "neighborhood")
    scheme.strategy = Strategy::neighborhood;
  else
    throw std::invalid_argument("unknown strategy: " + strategy);
  return scheme;
}

void validate(const SimulationConfig& config) {
  if (config.width < 2 || config.width > kMaxWidth)
    throw ConfigError("width", "must be between 2 and " +
                                   std::to_string(kMaxWidth));
  if (config.trials == 0)
    throw ConfigError("trials", "must be at least 1");
  switch (config.prediction.kind) {
    case PredictionModel::Kind::exact:
      break;
    case PredictionModel::Kind::uniform_offset:
    case PredictionModel::Kind::discrete_laplacian:
      if (!(config.prediction.scale >= 0.0))
        throw ConfigError("prediction.scale", "must be non-negative");
      break;
  }
  switch (config.channel.kind) {
    case ChannelModel::Kind::iid_bitflip:
      if (!(config.channel.p_flip >= 0.0 && config.channel.p_flip <= 1.0))
        throw ConfigError("channel.p_flip", "must lie in [0, 1]");
      break;
    case ChannelModel::Kind::at_most_m_flips: {
      const auto& w = config.channel.flip_count_weights;
      if (w.empty())
        throw ConfigError("channel.flip_count_weights",
                          "must list at least the weight for zero flips");
      if (static_cast<int>(w.size()) > config.width + 1)
        throw ConfigError("channel.flip_count_weights",
                          "cannot ask for more flips than codeword bits");
      double sum = 0.0;
      for (double x : w) {
        if (!(x >= 0.0))
          throw ConfigError("channel.flip_count_weights",
                            "weights must be non-negative");
        sum += x;
      }
      if (!(sum > 0.0))
        throw ConfigError("channel.flip_count_weights",
                          "weights must not all be zero");
      break;
    }
  }
  if (config.radius < 0 || config.radius > config.width)
    throw ConfigError("radius", "must lie in [0, width]");
  bool any_neighborhood = false;
  for (const Scheme& s : resolve_schemes(config))
    any_neighborhood |= s.strategy == Strategy::neighborhood;
  if (any_neighborhood && config.radius == 0 && !config.include_center)
    throw ConfigError("radius",
                      "radius 0 without the center leaves no candidates");
  uint32_t max_value = (uint32_t{1} << config.width) - 1;
  for (uint32_t v : config.source_values)
    if (v > max_value)
      throw ConfigError("source_values",
                        "value " + std::to_string(v) + " exceeds " +
                            std::to_string(max_value));
  if (config.threads < 0)
    throw ConfigError("threads", "must be non-negative (0 = hardware)");
}

double psnr(double mse, double maxval) {
  if (mse < 0.0) throw std::invalid_argument("mse must be non-negative");
  if (!(maxval > 0.0)) throw std::invalid_argument("maxval must be positive");
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(maxval * maxval / mse);
}

double SchemeResult::mse() const {
  if (trials == 0) return 0.0;
  return static_cast<double>(squared_error_sum) / static_cast<double>(trials);
}

double SchemeResult::psnr_db(uint32_t maxval) const {
  return psnr(mse(), static_cast<double>(maxval));
}

double SchemeResult::exact_recovery_rate() const {
  if (trials == 0) return 0.0;
  return static_cast<double>(exact_recoveries) / static_cast<double>(trials);
}

double SchemeResult::worse_than_prediction_rate() const {
  if (trials == 0) return 0.0;
  return static_cast<double>(worse_than_prediction) /
         static_cast<double>(trials);
}

int sample_prediction_offset(const PredictionModel& model, SplitMix64& rng) {
  switch (model.kind) {
    case PredictionModel::Kind::exact:
      return 0;
    case PredictionModel::Kind::uniform_offset: {
      int64_t s = std::llround(model.scale);
      if (s <= 0) return 0;
      return static_cast<int>(
          static_cast<int64_t>(rng.next_below(2 * s + 1)) - s);
    }
    case PredictionModel::Kind::discrete_laplacian: {
      if (model.scale <= 0.0) return 0;
      double theta = std::exp(-1.0 / model.scale);
      int64_t k = sample_geometric(theta, rng) - sample_geometric(theta, rng);
      return static_cast<int>(k);
    }
  }
  return 0;
}

uint32_t predict(uint32_t original, const PredictionModel& model, int width,
                 SplitMix64& rng) {
  int64_t max_value = (int64_t{1} << width) - 1;
  int64_t shifted =
      static_cast<int64_t>(original) + sample_prediction_offset(model, rng);
  return static_cast<uint32_t>(std::clamp<int64_t>(shifted, 0, max_value));
}

uint32_t sample_flip_mask(const ChannelModel& channel, int width,
                          SplitMix64& rng) {
  uint32_t mask = 0;
  switch (channel.kind) {
    case ChannelModel::Kind::iid_bitflip: {
      for (int bit = 0; bit < width; ++bit)
        if (rng.next_double() < channel.p_flip) mask |= uint32_t{1} << bit;
      break;
    }
    case ChannelModel::Kind::at_most_m_flips: {
      const auto& weights = channel.flip_count_weights;
      double total = std::accumulate(weights.begin(), weights.end(), 0.0);
      double u = rng.next_double() * total;
      size_t count = weights.size() - 1;
      double cum = 0.0;
      for (size_t i = 0; i < weights.size(); ++i) {
        cum += weights[i];
        if (u < cum) {
          count = i;
          break;
        }
      }
      // Partial Fisher-Yates: pick `count` distinct bit positions.
      std::vector<int> positions(width);
      std::iota(positions.begin(), positions.end(), 0);
      for (size_t i = 0; i < count; ++i) {
        size_t j = i + static_cast<size_t>(rng.next_below(width - i));
        std::swap(positions[i], positions[j]);
        mask |= uint32_t{1} << positions[i];
      }
      break;
    }
  }
  return mask;
}

Codeword flip_bits(const Codeword& cw, const ChannelModel& channel,
                   SplitMix64& rng) {
  return Codeword(cw.bits() ^ sample_flip_mask(channel, cw.width(), rng),
                  cw.width());
}

uint32_t run_trial_output(uint32_t original, uint32_t predicted,
                          uint32_t flip_mask, const CodeTable& table,
                          const Scheme& scheme,
                          const SimulationConfig& config) {
  Codeword sent = encode(original, table);
  Codeword corrupted(sent.bits() ^ flip_mask, sent.width());
  switch (scheme.strategy) {
    case Strategy::threshold:
      return threshold_reconstruct(decode(corrupted, table), predicted,
                                   config.threshold);
    case Strategy::neighborhood:
      return reconstruct(corrupted, predicted, table,
                         {config.radius, config.include_center});
  }
  return predicted;
}

SimulationReport run_simulation(const SimulationConfig& config) {
  validate(config);
  const std::vector<Scheme> schemes = resolve_schemes(config);
  const CodeTable binary = natural_binary(config.width);
  const CodeTable gray = generate_gray(config.width);
  const CodeTable counting = generate_counting(config.width);
  const uint32_t domain = uint32_t{1} << config.width;

  unsigned requested = config.threads == 0
                           ? std::max(1u, std::thread::hardware_concurrency())
                           : static_cast<unsigned>(config.threads);
  unsigned workers = static_cast<unsigned>(
      std::min<uint64_t>(requested, config.trials));

  // counters[w][s] = {squared_error_sum, exact, worse} for worker w.
  struct Counters {
    uint64_t squared_error_sum = 0;
    uint64_t exact_recoveries = 0;
    uint64_t worse_than_prediction = 0;
  };
  std::vector<std::vector<Counters>> counters(
      workers, std::vector<Counters>(schemes.size()));

  auto run_range = [&](unsigned worker, uint64_t first, uint64_t last) {
    std::vector<Counters>& local = counters[worker];
    for (uint64_t trial = first; trial < last; ++trial) {
      SplitMix64 rng(substream_seed(config.seed, trial));
      uint32_t original =
          config.source_values.empty()
              ? static_cast<uint32_t>(rng.next_below(domain))
              : config.source_values[rng.next_below(
                    config.source_values.size())];
      uint32_t predicted = predict(original, config.prediction,
                                   config.width, rng);
      uint32_t mask = sample_flip_mask(config.channel, config.width, rng);
      uint32_t prediction_error = abs_diff(predicted, original);
      for (size_t s = 0; s < schemes.size(); ++s) {
        const CodeTable& table =
            table_for(schemes[s].mapping, binary, gray, counting);
        uint32_t output = run_trial_output(original, predicted, mask, table,
                                           schemes[s], config);
        uint64_t err = abs_diff(output, original);
        local[s].squared_error_sum += err * err;
        local[s].exact_recoveries += output == original;
        local[s].worse_than_prediction += err > prediction_error;
      }
    }
  };

  if (workers <= 1) {
    run_range(0, 0, config.trials);
  } else {
    std::vector<std::thread> pool;
    uint64_t chunk = config.trials / workers;
    uint64_t extra = config.trials % workers;
    uint64_t next = 0;
    for (unsigned w = 0; w < workers; ++w) {
      uint64_t first = next;
      uint64_t last = first + chunk + (w < extra ? 1 : 0);
      next = last;
      pool.emplace_back(run_range, w, first, last);
    }
    for (std::thread& t : pool) t.join();
  }

  SimulationReport report;
  report.config = config;
  report.config.schemes = schemes;
  for (size_t s = 0; s < schemes.size(); ++s) {
    SchemeResult result;
    result.scheme = schemes[s];
    result.trials = config.trials;
    for (unsigned w = 0; w < workers; ++w) {
      result.squared_error_sum += counters[w][s].squared_error_sum;
      result.exact_recoveries += counters[w][s].exact_recoveries;
      result.worse_than_prediction += counters[w][s].worse_than_prediction;
    }
    report.results.push_back(result);
  }
  return report;
}

nlohmann::ordered_json SimulationReport::to_json() const {
  nlohmann::ordered_json j;
  j["config"]["width"] = config.width;
  j["config"]["trials"] = config.trials;
  j["config"]["seed"] = config.seed;
  j["config"]["prediction"]["kind"] =
      prediction_kind_name(config.prediction.kind);
  j["config"]["prediction"]["scale"] = config.prediction.scale;
  j["config"]["channel"]["kind"] = channel_kind_name(config.channel.kind);
  if (config.channel.kind == ChannelModel::Kind::iid_bitflip)
    j["config"]["channel"]["p_flip"] = config.channel.p_flip;
  else
    j["config"]["channel"]["flip_count_weights"] =
        config.channel.flip_count_weights;
  j["config"]["radius"] = config.radius;
  j["config"]["include_center"] = config.include_center;
  j["config"]["threshold"] = config.threshold;
  j["config"]["source"]["kind"] =
      config.source_values.empty() ? "uniform" : "values";
  j["config"]["source"]["count"] = config.source_values.size();

  uint32_t maxval = (uint32_t{1} << config.width) - 1;
  j["results"] = nlohmann::ordered_json::array();
  for (const SchemeResult& r : results) {
    nlohmann::ordered_json entry;
    entry["scheme"] = scheme_id(r.scheme);
    entry["mapping"] = mapping_name(r.scheme.mapping);
    entry["strategy"] = strategy_name(r.scheme.strategy);
    entry["trials"] = r.trials;
    entry["mse"] = r.mse();
    double db = r.psnr_db(maxval);
    if (std::isinf(db))
      entry["psnr_db"] = "inf";
    else
      entry["psnr_db"] = db;
    entry["exact_recovery_rate"] = r.exact_recovery_rate();
    entry["worse_than_prediction_rate"] = r.worse_than_prediction_rate();
    entry["squared_error_sum"] = r.squared_error_sum;
    entry["exact_recoveries"] = r.exact_recoveries;
    entry["worse_than_prediction"] = r.worse_than_prediction;
    j["results"].push_back(entry);
  }
  return j;
}

std::string SimulationReport::to_text_table() const {
  size_t name_width = std::string("scheme").size();
  for (const SchemeResult& r : results)
    name_width = std::max(name_width, scheme_id(r.scheme).size());

  uint32_t maxval = (uint32_t{1} << config.width) - 1;
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(name_width) + 2) << "scheme"
      << std::right << std::setw(12) << "mse" << std::setw(12) << "psnr_db"
      << std::setw(12) << "recovered" << std::setw(12) << "worse" << '\n';
  for (const SchemeResult& r : results) {
    out << std::left << std::setw(static_cast<int>(name_width) + 2)
        << scheme_id(r.scheme) << std::right << std::setw(12)
        << format_metric(r.mse()) << std::setw(12)
        << format_metric(r.psnr_db(maxval)) << std::setw(12)
        << format_metric(r.exact_recovery_rate()) << std::setw(12)
        << format_metric(r.worse_than_prediction_rate()) << '\n';
  }
  return out.str();
}

}  // namespace ccode
