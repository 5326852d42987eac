#ifndef POPTRADE_SIMULATOR_HPP
#define POPTRADE_SIMULATOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "poptrade/calendar.hpp"
#include "poptrade/ingest.hpp"
#include "poptrade/model.hpp"
#include "poptrade/rng.hpp"

namespace poptrade {

enum class Quality { Bad = 0, Good = 1 };

/// One trader's simulated path. Index 0 is the starting day: no signal, no
/// performance, popularity = initial_popularity. Steps 1..horizon each carry
/// the day's return (absent on thinned-away days), the rolling performance,
/// the updated posterior and the realized popularity.
struct Trajectory {
  std::string trader_id;
  std::vector<Date> dates;
  std::vector<std::optional<double>> raw_returns;
  std::vector<std::optional<double>> performance;
  std::vector<double> posterior;
  std::vector<int> popularity;
};

struct MarketConfig {
  int num_traders = 100;
  double fraction_good = 0.5;
  ModelParams params;  // per-trader template; its seed field is unused here
  Date date_start;
  std::uint64_t master_seed = 0;
  /// Daily probability that a trader closes no trades (0 disables thinning).
  double thinning = 0.0;
  int window_len = 5;

  void validate() const;
};

struct TraderTruth {
  std::string trader_id;
  Quality quality;
  Trajectory trajectory;
};

/// Full simulation output: deterministic given (config, master_seed).
struct GroundTruth {
  MarketConfig config;
  std::vector<TraderTruth> traders;
};

/// Simulates one trader. Per step the rng stream is consumed in a fixed
/// order: one uniform (activity), one normal when active (the day's return),
/// then the binomial adoption draw. Popularity at step t is
/// Binomial(N, posterior_step(popularity[t-1], params, f_t)) where f_t is
/// evaluated on the rolling performance through day t (f = 1 when the
/// window is empty).
Trajectory simulate_trajectory(const ModelParams& params, Quality quality, Rng& rng,
                               Date date_start, std::string trader_id, double thinning = 0.0,
                               int window_len = 5);

/// Simulates num_traders independent trajectories; trader i (0-based) is
/// good iff i < lround(fraction_good * num_traders), has id "t{i+1}" and
/// uses Rng::stream(master_seed, i).
GroundTruth simulate_market(const MarketConfig& config);

struct Logs {
  std::vector<TradeRecord> trades;
  std::vector<MirrorEvent> mirrors;
};

/// Emits one TradeRecord per active trader-day and mirror start/end events
/// such that the open-mirror count at end of each day equals the
/// trajectory's popularity. Increases open fresh mirrors; decreases close
/// the most recently opened ones (LIFO) with the end-exclusive convention.
Logs emit_logs(const GroundTruth& truth);

}  // namespace poptrade

#endif  // POPTRADE_SIMULATOR_HPP
