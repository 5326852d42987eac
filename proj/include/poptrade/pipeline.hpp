#ifndef POPTRADE_PIPELINE_HPP
#define POPTRADE_PIPELINE_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "poptrade/simulator.hpp"

namespace poptrade {

inline constexpr const char* kArtifactName = "poptrade";
inline constexpr const char* kArtifactVersion = "0.1.0";

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full run configuration: the market to simulate plus the analysis
/// choices. Serializes to/from a flat JSON object; a manifest echoing the
/// effective config is written next to every command's outputs, and a
/// manifest file is itself accepted wherever a config file is.
struct RunConfig {
  MarketConfig market;
  int top_cutoff = 100;
  std::string condition = "both";  // zero-one | not-top100 | both
  std::string bin_mode = "both";   // left | right | both
  /// Analyze inputs; default to <out>/trades.csv and <out>/mirrors.csv.
  std::optional<std::string> trades_csv;
  std::optional<std::string> mirrors_csv;

  /// The reference configuration: 2000 traders over 100 business days with
  /// 200 potential copiers each and a linear f with positive slope.
  static RunConfig defaults();

  /// Parses either a config object or a whole manifest (uses its "config").
  /// Unknown keys are rejected. Throws ConfigError.
  static RunConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  void validate() const;  // throws ConfigError
};

/// Writes trades.csv, mirrors.csv, ground_truth.csv and manifest.json.
void run_simulate(const RunConfig& config, const std::string& out_dir);

/// Reads the trade/mirror logs, reconstructs the proxies, runs the selected
/// regressions and summaries, and writes regression.csv, bins.csv,
/// lines.csv and manifest.json.
void run_analyze(const RunConfig& config, const std::string& out_dir);

/// simulate + analyze with a single manifest.
void run_pipeline(const RunConfig& config, const std::string& out_dir);

}  // namespace poptrade

#endif  // POPTRADE_PIPELINE_HPP
