#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ccode/analysis.hpp"
#include "ccode/codetable.hpp"
#include "ccode/countingcode.hpp"
#include "ccode/graycode.hpp"
#include "ccode/pgm.hpp"
#include "ccode/reconstruct.hpp"
#include "ccode/simulate.hpp"

namespace {

using ccode::CodeTable;

// Flat key=value configuration file: one pair per line, '#' or ';' starts a
// comment, blank lines ignored. (CLI11's own config reader only serves the
// top-level command, so the simulate subcommand merges this by hand.)
std::vector<std::pair<std::string, std::string>> read_flat_config(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  auto trim = [](std::string s) {
    const char* ws = " \t\r";
    size_t b = s.find_first_not_of(ws);
    size_t e = s.find_last_not_of(ws);
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string text = trim(line);
    if (text.empty() || text[0] == '#' || text[0] == ';') continue;
    size_t eq = text.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected key=value");
    pairs.emplace_back(trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
  }
  return pairs;
}

long long parse_config_int(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    long long parsed = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    throw ccode::ConfigError(key, "expected an integer, got '" + value + "'");
  }
}

uint64_t parse_config_uint(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    if (!value.empty() && value[0] == '-') throw std::invalid_argument(value);
    uint64_t parsed = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    throw ccode::ConfigError(key,
                             "expected a non-negative integer, got '" + value +
                                 "'");
  }
}

double parse_config_real(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    double parsed = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    throw ccode::ConfigError(key, "expected a number, got '" + value + "'");
  }
}

bool parse_config_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on")
    return true;
  if (value == "false" || value == "0" || value == "no" || value == "off")
    return false;
  throw ccode::ConfigError(key, "expected a boolean, got '" + value + "'");
}

std::vector<std::string> split_csv(const std::string& value) {
  std::vector<std::string> items;
  std::stringstream stream(value);
  std::string item;
  while (std::getline(stream, item, ',')) items.push_back(item);
  return items;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  file << text;
}

std::string render_code(const CodeTable& table, const std::string& format) {
  if (format == "csv") return to_csv(table);
  if (format == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (uint32_t v = 0; v < table.size(); ++v)
      rows.push_back({{"value", v},
                      {"codeword", table.codeword_at(v).to_string()}});
    return rows.dump(2) + "\n";
  }
  std::ostringstream out;
  out << std::left << std::setw(7) << "value" << "codeword\n";
  for (uint32_t v = 0; v < table.size(); ++v)
    out << std::left << std::setw(7) << v
        << table.codeword_at(v).to_string() << '\n';
  return out.str();
}

std::string render_profile(const CodeTable& table, const std::vector<int>& ks,
                           const std::string& format) {
  std::vector<ccode::DistanceProfile> profiles;
  for (int k : ks) profiles.push_back(ccode::near_k_profile(table, k));
  if (format == "csv") return ccode::profile_csv(table, ks);
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["ks"] = ks;
    doc["rows"] = nlohmann::ordered_json::array();
    for (uint32_t v = 0; v < table.size(); ++v) {
      nlohmann::ordered_json row;
      row["value"] = v;
      row["codeword"] = table.codeword_at(v).to_string();
      std::vector<int> distances;
      for (const auto& p : profiles) distances.push_back(p.distances[v]);
      row["distances"] = distances;
      doc["rows"].push_back(row);
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << std::left << std::setw(7) << "value" << std::setw(10) << "codeword";
  for (int k : ks) out << std::right << std::setw(5) << ("d" + std::to_string(k));
  out << '\n';
  for (uint32_t v = 0; v < table.size(); ++v) {
    out << std::left << std::setw(7) << v << std::setw(10)
        << table.codeword_at(v).to_string();
    for (const auto& p : profiles)
      out << std::right << std::setw(5) << p.distances[v];
    out << '\n';
  }
  return out.str();
}

std::string render_verdicts(const std::vector<ccode::Verdict>& verdicts,
                            const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& v : verdicts) rows.push_back(ccode::to_json(v));
    return rows.dump(2) + "\n";
  }
  size_t name_width = std::string("check").size();
  for (const auto& v : verdicts)
    name_width = std::max(name_width, v.check.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(name_width) + 2) << "check"
      << std::setw(4) << "n" << std::setw(6) << "pass" << "details\n";
  for (const auto& v : verdicts)
    out << std::left << std::setw(static_cast<int>(name_width) + 2) << v.check
        << std::setw(4) << v.n << std::setw(6) << (v.pass ? "pass" : "FAIL")
        << v.details << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "counting-code toolkit: value remapping tables, distance-law "
      "verification, prediction-guided reconstruction, and a bit-flip "
      "channel simulator",
      "ccode"};
  app.require_subcommand(1);
  int status = 0;

  // ---- gen-gray / gen-counting ------------------------------------------
  struct GenOpts {
    int n = 4;
    std::string format = "csv";
    std::string out;
  };
  GenOpts gray_opts, counting_opts;

  auto add_gen = [](CLI::App& parent, const char* name, const char* help,
                    GenOpts& opts, int min_width) {
    CLI::App* cmd = parent.add_subcommand(name, help);
    cmd->add_option("--n", opts.n, "codeword width in bits")
        ->required()
        ->check(CLI::Range(min_width, 16));
    cmd->add_option("--format", opts.format, "csv, json, or table")
        ->check(CLI::IsMember({"csv", "json", "table"}));
    cmd->add_option("--out", opts.out, "write to this file instead of stdout");
    return cmd;
  };

  CLI::App* gen_gray =
      add_gen(app, "gen-gray",
              "Print the reflected Gray code table (value,codeword rows)",
              gray_opts, 1);
  gen_gray->callback([&] {
    emit(gray_opts.out,
         render_code(ccode::generate_gray(gray_opts.n), gray_opts.format));
  });

  CLI::App* gen_counting =
      add_gen(app, "gen-counting",
              "Print the remapped counting code table (value,codeword rows)",
              counting_opts, 2);
  gen_counting->callback([&] {
    emit(counting_opts.out,
         render_code(ccode::generate_counting(counting_opts.n),
                     counting_opts.format));
  });

  // ---- profile -----------------------------------------------------------
  struct ProfileOpts {
    int n = 4;
    std::vector<int> ks{1, 2};
    std::string format = "csv";
    std::string out;
  };
  ProfileOpts profile_opts;
  CLI::App* profile = app.add_subcommand(
      "profile", "Print cyclic near-k Hamming distance columns for the "
                 "counting code");
  profile->add_option("--n", profile_opts.n, "codeword width in bits")
      ->required()
      ->check(CLI::Range(2, 16));
  profile->add_option("--k", profile_opts.ks, "index offsets (default 1,2)")
      ->delimiter(',');
  profile->add_option("--format", profile_opts.format, "csv, json, or table")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  profile->add_option("--out", profile_opts.out,
                      "write to this file instead of stdout");
  profile->callback([&] {
    emit(profile_opts.out,
         render_profile(ccode::generate_counting(profile_opts.n),
                        profile_opts.ks, profile_opts.format));
  });

  // ---- verify ------------------------------------------------------------
  struct VerifyOpts {
    int n = 4;
    int walks = 1000;
    int steps = 128;
    uint64_t seed = 1;
    std::string format = "table";
    std::string out;
  };
  VerifyOpts verify_opts;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check the distance laws of the counting code; exit 1 if "
                "any check fails");
  verify->add_option("--n", verify_opts.n, "codeword width in bits")
      ->required()
      ->check(CLI::Range(2, 16));
  verify->add_option("--walks", verify_opts.walks,
                     "random walks for the parity check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--steps", verify_opts.steps, "steps per random walk")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_opts.seed, "master seed for the walks");
  verify->add_option("--format", verify_opts.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  verify->add_option("--out", verify_opts.out,
                     "write to this file instead of stdout");
  verify->callback([&] {
    CodeTable table = ccode::generate_counting(verify_opts.n);
    std::vector<ccode::Verdict> verdicts;
    verdicts.push_back(ccode::check_average_distance_bounds(table));
    verdicts.push_back(ccode::check_near1_distance_law(table));
    if (verify_opts.n >= 3)
      verdicts.push_back(ccode::check_near2_distance_law(table));
    verdicts.push_back(ccode::check_parity_invariant(
        verify_opts.n, verify_opts.walks, verify_opts.steps,
        verify_opts.seed));
    emit(verify_opts.out, render_verdicts(verdicts, verify_opts.format));
    for (const auto& v : verdicts)
      if (!v.pass) status = 1;
  });

  // ---- reconstruct -------------------------------------------------------
  struct ReconstructOpts {
    int n = 4;
    std::string decoded;
    uint32_t predicted = 0;
    int radius = 1;
    bool exclude_center = false;
  };
  ReconstructOpts rec_opts;
  CLI::App* reconstruct = app.add_subcommand(
      "reconstruct", "Pick the output value for a decoded codeword and a "
                     "predicted value using Hamming-ball candidates");
  reconstruct->add_option("--n", rec_opts.n, "codeword width in bits")
      ->required()
      ->check(CLI::Range(2, 16));
  reconstruct
      ->add_option("--decoded", rec_opts.decoded,
                   "decoded codeword as a bit string, MSB first")
      ->required();
  reconstruct
      ->add_option("--predicted", rec_opts.predicted, "predicted pixel value")
      ->required();
  reconstruct->add_option("--radius", rec_opts.radius,
                          "candidate Hamming-ball radius (default 1)");
  reconstruct->add_flag("--exclude-center", rec_opts.exclude_center,
                        "do not keep the decoded codeword as a candidate");
  reconstruct->callback([&] {
    ccode::Codeword decoded = ccode::parse_codeword(rec_opts.decoded);
    if (decoded.width() != rec_opts.n)
      throw std::invalid_argument("--decoded must have exactly " +
                                  std::to_string(rec_opts.n) + " bits");
    CodeTable table = ccode::generate_counting(rec_opts.n);
    uint32_t value = ccode::reconstruct(
        decoded, rec_opts.predicted, table,
        {rec_opts.radius, !rec_opts.exclude_center});
    std::cout << value << '\n';
  });

  // ---- search-even -------------------------------------------------------
  struct SearchOpts {
    int n = 2;
    int distance = 2;
  };
  SearchOpts search_opts;
  CLI::App* search_even = app.add_subcommand(
      "search-even", "Exhaustively search for a counting sequence whose "
                     "cyclic step distance is a constant even number; prints "
                     "\"none\" or a witness (exit 1)");
  search_even->add_option("--n", search_opts.n, "codeword width (2 or 3)")
      ->required()
      ->check(CLI::Range(2, 3));
  search_even
      ->add_option("--distance", search_opts.distance,
                   "required constant even distance")
      ->required();
  search_even->callback([&] {
    auto witness = ccode::search_constant_even_near1(search_opts.n,
                                                     search_opts.distance);
    if (!witness) {
      std::cout << "none\n";
      return;
    }
    std::ostringstream out;
    for (size_t i = 0; i < witness->size(); ++i)
      out << (i ? "," : "") << (*witness)[i];
    std::cout << out.str() << '\n';
    status = 1;  // a witness falsifies the parity law
  });

  // ---- simulate ----------------------------------------------------------
  struct SimulateOpts {
    ccode::SimulationConfig config;
    std::string config_path;
    std::string prediction = "discrete-laplacian";
    double scale = 2.0;
    std::string channel = "iid-bitflip";
    double p_flip = 0.02;
    std::vector<double> flip_weights;
    std::vector<std::string> schemes;
    bool exclude_center = false;
    std::string image;
    std::string format = "table";
    std::string out;
  };
  SimulateOpts sim_opts;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte-Carlo pipeline: draw originals, predict, flip "
                  "codeword bits, reconstruct under each scheme, report "
                  "MSE/PSNR");
  simulate->add_option("--config", sim_opts.config_path,
                       "read defaults from a flat key=value file (keys match "
                       "the long option names; explicit flags win)");
  CLI::Option* n_opt =
      simulate->add_option("--n", sim_opts.config.width, "pixel bit depth")
          ->check(CLI::Range(2, 16));
  CLI::Option* trials_opt = simulate->add_option(
      "--trials", sim_opts.config.trials, "number of Monte-Carlo trials");
  CLI::Option* seed_opt =
      simulate->add_option("--seed", sim_opts.config.seed, "master seed");
  CLI::Option* prediction_opt =
      simulate
          ->add_option("--prediction", sim_opts.prediction,
                       "prediction model: exact, uniform-offset, or "
                       "discrete-laplacian")
          ->check(
              CLI::IsMember({"exact", "uniform-offset", "discrete-laplacian"}));
  CLI::Option* scale_opt = simulate->add_option(
      "--scale", sim_opts.scale,
      "prediction spread (offset bound or Laplacian scale)");
  CLI::Option* channel_opt =
      simulate
          ->add_option("--channel", sim_opts.channel,
                       "error channel: iid-bitflip or at-most-m-flips")
          ->check(CLI::IsMember({"iid-bitflip", "at-most-m-flips"}));
  CLI::Option* p_flip_opt =
      simulate->add_option("--p-flip", sim_opts.p_flip,
                           "per-bit flip probability (iid-bitflip)");
  CLI::Option* weights_opt =
      simulate
          ->add_option("--flip-weights", sim_opts.flip_weights,
                       "weights over flip counts 0,1,... (implies "
                       "--channel at-most-m-flips)")
          ->delimiter(',');
  CLI::Option* threshold_opt =
      simulate->add_option("--threshold", sim_opts.config.threshold,
                           "revert-to-prediction threshold");
  CLI::Option* radius_opt = simulate->add_option(
      "--radius", sim_opts.config.radius, "candidate Hamming-ball radius");
  CLI::Option* exclude_opt =
      simulate->add_flag("--exclude-center", sim_opts.exclude_center,
                         "drop the decoded codeword from the candidate set");
  CLI::Option* schemes_opt =
      simulate
          ->add_option("--schemes", sim_opts.schemes,
                       "mapping+strategy pairs, e.g. counting+neighborhood "
                       "(default: all six)")
          ->delimiter(',');
  CLI::Option* threads_opt = simulate->add_option(
      "--threads", sim_opts.config.threads, "worker threads (0 = hardware)");
  CLI::Option* image_opt = simulate->add_option(
      "--image", sim_opts.image, "PGM file supplying source pixel values");
  CLI::Option* format_opt =
      simulate->add_option("--format", sim_opts.format, "table or json")
          ->check(CLI::IsMember({"table", "json"}));
  CLI::Option* out_opt = simulate->add_option(
      "--out", sim_opts.out, "write to this file instead of stdout");
  simulate->callback([&] {
    ccode::SimulationConfig& config = sim_opts.config;
    std::set<std::string> from_file;
    if (!sim_opts.config_path.empty()) {
      struct FileKey {
        CLI::Option* flag;
        std::function<void(const std::string&)> apply;
      };
      const std::map<std::string, FileKey> file_keys = {
          {"n",
           {n_opt,
            [&](const std::string& v) {
              config.width = static_cast<int>(parse_config_int("n", v));
            }}},
          {"trials",
           {trials_opt,
            [&](const std::string& v) {
              config.trials = parse_config_uint("trials", v);
            }}},
          {"seed",
           {seed_opt,
            [&](const std::string& v) {
              config.seed = parse_config_uint("seed", v);
            }}},
          {"prediction",
           {prediction_opt,
            [&](const std::string& v) { sim_opts.prediction = v; }}},
          {"scale",
           {scale_opt,
            [&](const std::string& v) {
              sim_opts.scale = parse_config_real("scale", v);
            }}},
          {"channel",
           {channel_opt,
            [&](const std::string& v) { sim_opts.channel = v; }}},
          {"p-flip",
           {p_flip_opt,
            [&](const std::string& v) {
              sim_opts.p_flip = parse_config_real("p-flip", v);
            }}},
          {"flip-weights",
           {weights_opt,
            [&](const std::string& v) {
              sim_opts.flip_weights.clear();
              for (const std::string& item : split_csv(v))
                sim_opts.flip_weights.push_back(
                    parse_config_real("flip-weights", item));
            }}},
          {"threshold",
           {threshold_opt,
            [&](const std::string& v) {
              config.threshold =
                  static_cast<uint32_t>(parse_config_uint("threshold", v));
            }}},
          {"radius",
           {radius_opt,
            [&](const std::string& v) {
              config.radius = static_cast<int>(parse_config_int("radius", v));
            }}},
          {"exclude-center",
           {exclude_opt,
            [&](const std::string& v) {
              sim_opts.exclude_center = parse_config_bool("exclude-center", v);
            }}},
          {"schemes",
           {schemes_opt,
            [&](const std::string& v) { sim_opts.schemes = split_csv(v); }}},
          {"threads",
           {threads_opt,
            [&](const std::string& v) {
              config.threads =
                  static_cast<int>(parse_config_int("threads", v));
            }}},
          {"image",
           {image_opt, [&](const std::string& v) { sim_opts.image = v; }}},
          {"format",
           {format_opt, [&](const std::string& v) { sim_opts.format = v; }}},
          {"out", {out_opt, [&](const std::string& v) { sim_opts.out = v; }}},
      };
      for (const auto& [key, value] : read_flat_config(sim_opts.config_path)) {
        auto entry = file_keys.find(key);
        if (entry == file_keys.end())
          throw ccode::ConfigError(key, "unknown configuration key");
        if (entry->second.flag->count() > 0) continue;  // explicit flag wins
        entry->second.apply(value);
        from_file.insert(key);
      }
    }
    config.include_center = !sim_opts.exclude_center;
    if (sim_opts.prediction == "exact")
      config.prediction.kind = ccode::PredictionModel::Kind::exact;
    else if (sim_opts.prediction == "uniform-offset")
      config.prediction.kind = ccode::PredictionModel::Kind::uniform_offset;
    else if (sim_opts.prediction == "discrete-laplacian")
      config.prediction.kind = ccode::PredictionModel::Kind::discrete_laplacian;
    else
      throw ccode::ConfigError("prediction",
                               "unknown model '" + sim_opts.prediction + "'");
    config.prediction.scale = sim_opts.scale;
    bool channel_given = channel_opt->count() > 0 || from_file.count("channel");
    bool weights_given =
        weights_opt->count() > 0 || from_file.count("flip-weights");
    if (sim_opts.channel == "at-most-m-flips" ||
        (weights_given && !channel_given)) {
      config.channel.kind = ccode::ChannelModel::Kind::at_most_m_flips;
      config.channel.flip_count_weights = sim_opts.flip_weights;
    } else if (sim_opts.channel == "iid-bitflip") {
      config.channel.kind = ccode::ChannelModel::Kind::iid_bitflip;
      config.channel.p_flip = sim_opts.p_flip;
    } else {
      throw ccode::ConfigError("channel",
                               "unknown channel '" + sim_opts.channel + "'");
    }
    for (const std::string& id : sim_opts.schemes)
      config.schemes.push_back(ccode::parse_scheme(id));
    if (!sim_opts.image.empty())
      config.source_values = ccode::requantize(
          ccode::load_pgm_file(sim_opts.image), config.width);
    if (sim_opts.format != "table" && sim_opts.format != "json")
      throw ccode::ConfigError("format",
                               "expected table or json, got '" +
                                   sim_opts.format + "'");
    ccode::SimulationReport report = ccode::run_simulation(config);
    emit(sim_opts.out, sim_opts.format == "json"
                           ? report.to_json().dump(2) + "\n"
                           : report.to_text_table());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ccode::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
