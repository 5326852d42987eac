// poptrade: simulate popularity dynamics for a market of social traders,
// reconstruct the popularity/performance proxies from the transaction logs,
// and fit the interaction regression with its plot-ready summaries.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "poptrade/pipeline.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumerical = 4;

struct Flags {
  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir = "out";
  std::optional<std::string> condition;
  std::optional<int> window;
  std::optional<std::string> bin_mode;
};

void add_common_flags(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON config file (or a previous manifest.json)");
  cmd->add_option("--seed", flags.seed, "master seed (overrides the config)");
  cmd->add_option("--out", flags.out_dir, "output directory")->capture_default_str();
  cmd->add_option("--condition", flags.condition, "regression condition")
      ->check(CLI::IsMember({"zero-one", "not-top100", "both"}));
  cmd->add_option("--window", flags.window, "rolling performance window (business days)");
  cmd->add_option("--bin-mode", flags.bin_mode, "binned summary mode")
      ->check(CLI::IsMember({"left", "right", "both"}));
}

poptrade::RunConfig load_config(const Flags& flags) {
  poptrade::RunConfig cfg = poptrade::RunConfig::defaults();
  if (flags.config_path) {
    std::ifstream in(*flags.config_path);
    if (!in) throw poptrade::IoError("cannot open config file " + *flags.config_path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw poptrade::ConfigError(*flags.config_path + ": " + e.what());
    }
    cfg = poptrade::RunConfig::from_json(j);
  }
  // Flags win over the config file.
  if (flags.seed) cfg.market.master_seed = *flags.seed;
  if (flags.condition) cfg.condition = *flags.condition;
  if (flags.window) cfg.market.window_len = *flags.window;
  if (flags.bin_mode) cfg.bin_mode = *flags.bin_mode;
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"popularity-dynamics simulator and regression pipeline"};
  app.require_subcommand(1);

  Flags flags;
  CLI::App* simulate = app.add_subcommand("simulate", "write synthetic transaction logs");
  CLI::App* analyze = app.add_subcommand("analyze", "run the regression pipeline on logs");
  CLI::App* pipeline = app.add_subcommand("pipeline", "simulate and analyze in one run");
  add_common_flags(simulate, flags);
  add_common_flags(analyze, flags);
  add_common_flags(pipeline, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    const poptrade::RunConfig cfg = load_config(flags);
    if (simulate->parsed()) {
      poptrade::run_simulate(cfg, flags.out_dir);
    } else if (analyze->parsed()) {
      poptrade::run_analyze(cfg, flags.out_dir);
    } else {
      poptrade::run_pipeline(cfg, flags.out_dir);
    }
  } catch (const poptrade::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const poptrade::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const poptrade::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
