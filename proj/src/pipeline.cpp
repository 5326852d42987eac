#include "poptrade/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "poptrade/analysis.hpp"
#include "poptrade/io.hpp"

namespace poptrade {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

RunConfig reference_config() {
  RunConfig cfg;
  cfg.market.num_traders = 2000;
  cfg.market.fraction_good = 0.05;
  cfg.market.date_start = Date::from_ymd(2011, 9, 9);
  cfg.market.master_seed = 20110909;
  cfg.market.thinning = 0.0;
  cfg.market.window_len = 5;
  cfg.market.params.population_size = 200;
  cfg.market.params.alpha = 1.0;
  cfg.market.params.initial_popularity = 1;
  cfg.market.params.horizon = 100;
  cfg.market.params.f_spec = LinearF{1.2, 0.35, 0.0, 10.0};
  cfg.market.params.signal = SignalModel{2.0, -2.0, 2.0};
  return cfg;
}

void check_known_keys(const json& j, const std::set<std::string>& known, const char* where) {
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) {
      throw ConfigError(std::string(where) + ": unknown key '" + key + "'");
    }
  }
}

template <typename T>
void read_key(const json& j, const char* key, T& out) {
  if (const auto it = j.find(key); it != j.end()) {
    try {
      out = it->get<T>();
    } catch (const json::exception&) {
      throw ConfigError(std::string("config: bad value for '") + key + "'");
    }
  }
}

Date read_date(const json& j, const char* key, Date fallback) {
  if (const auto it = j.find(key); it != j.end()) {
    if (!it->is_string()) throw ConfigError(std::string("config: '") + key + "' must be a string");
    const auto d = Date::parse_iso(it->get<std::string>());
    if (!d) {
      throw ConfigError(std::string("config: '") + key + "' is not a valid ISO date: " +
                        it->get<std::string>());
    }
    return *d;
  }
  return fallback;
}

std::string read_to_string(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << bytes;
  if (!out) throw IoError("failed writing " + path.string());
}

void write_manifest(const fs::path& out_dir, const std::string& command, const RunConfig& config,
                    const std::vector<std::string>& output_files) {
  json outputs = json::object();
  for (const auto& name : output_files) {
    char hex[20];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(read_to_string(out_dir / name))));
    outputs[name] = std::string("fnv1a64:") + hex;
  }
  const json manifest = {{"artifact", kArtifactName},
                         {"version", kArtifactVersion},
                         {"command", command},
                         {"config", config.to_json()},
                         {"outputs", outputs}};
  write_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

std::vector<TradeRecord> parse_trades_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return parse_trades(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.message());
  }
}

std::vector<MirrorEvent> parse_mirrors_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return parse_mirrors(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.message());
  }
}

struct AnalyzeOutputs {
  std::vector<std::string> files;
};

AnalyzeOutputs analyze_into(const RunConfig& config, const fs::path& out_dir) {
  const fs::path trades_path = config.trades_csv ? fs::path(*config.trades_csv)
                                                 : out_dir / "trades.csv";
  const fs::path mirrors_path = config.mirrors_csv ? fs::path(*config.mirrors_csv)
                                                   : out_dir / "mirrors.csv";
  const auto trades = parse_trades_file(trades_path);
  const auto mirrors = parse_mirrors_file(mirrors_path);
  if (trades.empty() && mirrors.empty()) {
    throw IoError("inputs contain no records: " + trades_path.string() + ", " +
                  mirrors_path.string());
  }

  // Analysis span and trader roster come from the data itself.
  std::optional<Date> lo, hi;
  auto widen = [&](Date d) {
    if (!lo || d < *lo) lo = d;
    if (!hi || d > *hi) hi = d;
  };
  std::set<std::string> roster_set;
  for (const auto& tr : trades) {
    widen(tr.close_date);
    roster_set.insert(tr.trader_id);
  }
  for (const auto& ev : mirrors) {
    widen(ev.start_date);
    if (ev.end_date) widen(*ev.end_date);
    roster_set.insert(ev.target_id);
  }
  const DaySpan range{*lo, *hi};
  const std::vector<std::string> roster(roster_set.begin(), roster_set.end());

  const PopularityTable popularity = reconstruct_popularity(mirrors, range, &roster);
  const PerformanceTable performance =
      performance_table(trades, range, config.market.window_len);
  const std::vector<UserDayPoint> points = build_points(popularity, performance, range);
  const DailyPopularityRanks ranks = DailyPopularityRanks::build(popularity);

  const std::vector<UserDayPoint> zero_one =
      apply_filters(points, PopZeroOne{}, ranks);
  const std::vector<UserDayPoint> not_top =
      apply_filters(points, PopPositiveNotTop100{config.top_cutoff}, ranks);

  std::vector<std::pair<std::string, RegressionResult>> fits;
  if (config.condition == "zero-one" || config.condition == "both") {
    fits.emplace_back("zero-one", ols_interaction_fit(zero_one));
  }
  if (config.condition == "not-top100" || config.condition == "both") {
    fits.emplace_back("not-top100", ols_interaction_fit(not_top));
  }

  std::vector<std::pair<std::string, std::vector<BinnedCell>>> bins;
  const bool want_left = config.bin_mode == "left" || config.bin_mode == "both";
  const bool want_right = config.bin_mode == "right" || config.bin_mode == "both";
  if (want_left) bins.emplace_back("left", bin_summaries(zero_one, BinMode::LeftPlot));
  if (want_right) bins.emplace_back("right", bin_summaries(not_top, BinMode::RightPlot));

  AnalyzeOutputs out;
  {
    std::ostringstream ss;
    write_regression_csv(ss, fits);
    write_file(out_dir / "regression.csv", ss.str());
    out.files.push_back("regression.csv");
  }
  {
    std::ostringstream ss;
    write_bins_csv(ss, bins);
    write_file(out_dir / "bins.csv", ss.str());
    out.files.push_back("bins.csv");
  }
  if (want_left) {
    std::ostringstream ss;
    write_lines_csv(ss, group_fit_lines(zero_one, BinMode::LeftPlot));
    write_file(out_dir / "lines.csv", ss.str());
    out.files.push_back("lines.csv");
  }
  return out;
}

std::vector<std::string> simulate_into(const RunConfig& config, const fs::path& out_dir) {
  const GroundTruth truth = simulate_market(config.market);
  const Logs logs = emit_logs(truth);
  {
    std::ostringstream ss;
    write_trades_csv(ss, logs.trades);
    write_file(out_dir / "trades.csv", ss.str());
  }
  {
    std::ostringstream ss;
    write_mirrors_csv(ss, logs.mirrors);
    write_file(out_dir / "mirrors.csv", ss.str());
  }
  {
    std::ostringstream ss;
    write_ground_truth_csv(ss, truth);
    write_file(out_dir / "ground_truth.csv", ss.str());
  }
  return {"trades.csv", "mirrors.csv", "ground_truth.csv"};
}

fs::path prepare_out_dir(const std::string& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir + ": " + ec.message());
  return {out_dir};
}

}  // namespace

RunConfig RunConfig::defaults() { return reference_config(); }

RunConfig RunConfig::from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  // Accept a manifest written by a previous run.
  if (j.contains("artifact") && j.contains("config")) {
    return from_json(j.at("config"));
  }
  check_known_keys(j, {"num_traders", "fraction_good", "population_size", "alpha",
                       "initial_popularity", "horizon", "date_start", "seed", "thinning",
                       "window", "f", "signal", "condition", "bin_mode", "top_cutoff",
                       "trades_csv", "mirrors_csv"},
                   "config");
  RunConfig cfg = defaults();
  read_key(j, "num_traders", cfg.market.num_traders);
  read_key(j, "fraction_good", cfg.market.fraction_good);
  read_key(j, "population_size", cfg.market.params.population_size);
  read_key(j, "alpha", cfg.market.params.alpha);
  read_key(j, "initial_popularity", cfg.market.params.initial_popularity);
  read_key(j, "horizon", cfg.market.params.horizon);
  cfg.market.date_start = read_date(j, "date_start", cfg.market.date_start);
  read_key(j, "seed", cfg.market.master_seed);
  read_key(j, "thinning", cfg.market.thinning);
  read_key(j, "window", cfg.market.window_len);
  if (const auto it = j.find("f"); it != j.end()) {
    check_known_keys(*it, {"type", "c0", "c1", "clamp_min", "clamp_max"}, "config.f");
    std::string type = "linear";
    read_key(*it, "type", type);
    if (type == "linear") {
      LinearF lin;
      read_key(*it, "c0", lin.c0);
      read_key(*it, "c1", lin.c1);
      read_key(*it, "clamp_min", lin.clamp_min);
      read_key(*it, "clamp_max", lin.clamp_max);
      cfg.market.params.f_spec = lin;
    } else if (type == "exact-bayes") {
      cfg.market.params.f_spec = ExactBayes{};
    } else {
      throw ConfigError("config.f: unknown type '" + type + "' (linear | exact-bayes)");
    }
  }
  if (const auto it = j.find("signal"); it != j.end()) {
    check_known_keys(*it, {"mu_good", "mu_bad", "sigma"}, "config.signal");
    read_key(*it, "mu_good", cfg.market.params.signal.mu_good);
    read_key(*it, "mu_bad", cfg.market.params.signal.mu_bad);
    read_key(*it, "sigma", cfg.market.params.signal.sigma);
  }
  read_key(j, "condition", cfg.condition);
  read_key(j, "bin_mode", cfg.bin_mode);
  read_key(j, "top_cutoff", cfg.top_cutoff);
  std::string path;
  if (j.contains("trades_csv")) {
    read_key(j, "trades_csv", path);
    cfg.trades_csv = path;
  }
  if (j.contains("mirrors_csv")) {
    read_key(j, "mirrors_csv", path);
    cfg.mirrors_csv = path;
  }
  return cfg;
}

json RunConfig::to_json() const {
  json j = {{"num_traders", market.num_traders},
            {"fraction_good", market.fraction_good},
            {"population_size", market.params.population_size},
            {"alpha", market.params.alpha},
            {"initial_popularity", market.params.initial_popularity},
            {"horizon", market.params.horizon},
            {"date_start", market.date_start.to_iso()},
            {"seed", market.master_seed},
            {"thinning", market.thinning},
            {"window", market.window_len},
            {"condition", condition},
            {"bin_mode", bin_mode},
            {"top_cutoff", top_cutoff}};
  if (const auto* lin = std::get_if<LinearF>(&market.params.f_spec)) {
    j["f"] = {{"type", "linear"},
              {"c0", lin->c0},
              {"c1", lin->c1},
              {"clamp_min", lin->clamp_min},
              {"clamp_max", lin->clamp_max}};
  } else {
    j["f"] = {{"type", "exact-bayes"}};
  }
  j["signal"] = {{"mu_good", market.params.signal.mu_good},
                 {"mu_bad", market.params.signal.mu_bad},
                 {"sigma", market.params.signal.sigma}};
  if (trades_csv) j["trades_csv"] = *trades_csv;
  if (mirrors_csv) j["mirrors_csv"] = *mirrors_csv;
  return j;
}

void RunConfig::validate() const {
  try {
    market.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (condition != "zero-one" && condition != "not-top100" && condition != "both") {
    throw ConfigError("config: condition must be zero-one, not-top100 or both");
  }
  if (bin_mode != "left" && bin_mode != "right" && bin_mode != "both") {
    throw ConfigError("config: bin_mode must be left, right or both");
  }
  if (top_cutoff < 1) throw ConfigError("config: top_cutoff must be >= 1");
}

void run_simulate(const RunConfig& config, const std::string& out_dir) {
  config.validate();
  const fs::path dir = prepare_out_dir(out_dir);
  const auto files = simulate_into(config, dir);
  write_manifest(dir, "simulate", config, files);
}

void run_analyze(const RunConfig& config, const std::string& out_dir) {
  config.validate();
  const fs::path dir = prepare_out_dir(out_dir);
  const auto outputs = analyze_into(config, dir);
  write_manifest(dir, "analyze", config, outputs.files);
}

void run_pipeline(const RunConfig& config, const std::string& out_dir) {
  config.validate();
  const fs::path dir = prepare_out_dir(out_dir);
  auto files = simulate_into(config, dir);
  const auto outputs = analyze_into(config, dir);
  files.insert(files.end(), outputs.files.begin(), outputs.files.end());
  write_manifest(dir, "pipeline", config, files);
}

}  // namespace poptrade
