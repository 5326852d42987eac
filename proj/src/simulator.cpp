#include "poptrade/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace poptrade {

void MarketConfig::validate() const {
  if (num_traders < 1) throw std::invalid_argument("MarketConfig: num_traders must be >= 1");
  if (!(fraction_good >= 0.0 && fraction_good <= 1.0)) {
    throw std::invalid_argument("MarketConfig: fraction_good must be in [0, 1]");
  }
  if (!(thinning >= 0.0 && thinning < 1.0)) {
    throw std::invalid_argument("MarketConfig: thinning must be in [0, 1)");
  }
  if (window_len < 1) throw std::invalid_argument("MarketConfig: window_len must be >= 1");
  if (!is_business_day(date_start)) {
    throw std::invalid_argument("MarketConfig: date_start must be a business day");
  }
  params.validate();
}

Trajectory simulate_trajectory(const ModelParams& params, Quality quality, Rng& rng,
                               Date date_start, std::string trader_id, double thinning,
                               int window_len) {
  params.validate();
  if (!is_business_day(date_start)) {
    throw std::invalid_argument("simulate_trajectory: date_start must be a business day");
  }
  if (window_len < 1) throw std::invalid_argument("simulate_trajectory: window_len must be >= 1");

  const int T = params.horizon;
  const std::size_t len = static_cast<std::size_t>(T) + 1;
  Trajectory traj;
  traj.trader_id = std::move(trader_id);
  traj.dates.resize(len);
  traj.raw_returns.resize(len);
  traj.performance.resize(len);
  traj.posterior.resize(len);
  traj.popularity.resize(len);

  const double n_pool = static_cast<double>(params.population_size);
  traj.dates[0] = date_start;
  traj.popularity[0] = params.initial_popularity;
  traj.posterior[0] = std::min(
      (static_cast<double>(params.initial_popularity) + params.alpha) / (n_pool + params.alpha),
      1.0);

  const double mu =
      quality == Quality::Good ? params.signal.mu_good : params.signal.mu_bad;

  for (std::size_t t = 1; t < len; ++t) {
    traj.dates[t] = next_business_day(traj.dates[t - 1]);
    const bool active = rng.uniform01() >= thinning;
    if (active) traj.raw_returns[t] = rng.normal(mu, params.signal.sigma);

    // Rolling performance through day t, same rule as the ingest side: the
    // window days before the trajectory start hold no trades.
    const std::size_t begin =
        t + 1 >= static_cast<std::size_t>(window_len) ? t + 1 - static_cast<std::size_t>(window_len)
                                                      : 0;
    traj.performance[t] = mean_over_active_days(std::span<const std::optional<double>>(
        traj.raw_returns.data() + begin, t - begin + 1));

    const double f_value =
        traj.performance[t]
            ? eval_f(params.f_spec, *traj.performance[t], traj.popularity[t - 1], params)
            : 1.0;
    traj.posterior[t] = posterior_step(traj.popularity[t - 1], params, f_value);
    traj.popularity[t] = rng.binomial(params.population_size, traj.posterior[t]);
  }
  return traj;
}

GroundTruth simulate_market(const MarketConfig& config) {
  config.validate();
  GroundTruth truth;
  truth.config = config;
  truth.traders.reserve(static_cast<std::size_t>(config.num_traders));
  const long n_good = std::lround(config.fraction_good * config.num_traders);
  for (int i = 0; i < config.num_traders; ++i) {
    const Quality quality = i < n_good ? Quality::Good : Quality::Bad;
    Rng rng = Rng::stream(config.master_seed, static_cast<std::uint64_t>(i));
    TraderTruth trader;
    trader.trader_id = "t" + std::to_string(i + 1);
    trader.quality = quality;
    trader.trajectory =
        simulate_trajectory(config.params, quality, rng, config.date_start, trader.trader_id,
                            config.thinning, config.window_len);
    truth.traders.push_back(std::move(trader));
  }
  return truth;
}

Logs emit_logs(const GroundTruth& truth) {
  Logs logs;
  for (std::size_t trader_idx = 0; trader_idx < truth.traders.size(); ++trader_idx) {
    const Trajectory& traj = truth.traders[trader_idx].trajectory;
    const std::string& target = traj.trader_id;

    std::vector<MirrorEvent> events;  // in opening order
    std::vector<std::size_t> open;    // indices into events, LIFO
    long serial = 0;
    auto open_mirrors = [&](int k, Date day) {
      for (int j = 0; j < k; ++j) {
        MirrorEvent ev;
        ev.copier_id = "c" + std::to_string(trader_idx + 1) + "_" + std::to_string(++serial);
        ev.target_id = target;
        ev.start_date = day;
        open.push_back(events.size());
        events.push_back(std::move(ev));
      }
    };

    open_mirrors(traj.popularity[0], traj.dates[0]);
    for (std::size_t t = 1; t < traj.dates.size(); ++t) {
      if (traj.raw_returns[t]) {
        logs.trades.push_back({target, traj.dates[t], *traj.raw_returns[t]});
      }
      const int delta = traj.popularity[t] - traj.popularity[t - 1];
      if (delta >= 0) {
        open_mirrors(delta, traj.dates[t]);
      } else {
        for (int j = 0; j < -delta; ++j) {
          events[open.back()].end_date = traj.dates[t];
          open.pop_back();
        }
      }
    }
    logs.mirrors.insert(logs.mirrors.end(), std::make_move_iterator(events.begin()),
                        std::make_move_iterator(events.end()));
  }
  return logs;
}

}  // namespace poptrade
