#include "poptrade/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace poptrade {

namespace {

constexpr double kCi95 = 1.959964;

double round_to_multiple(double x, double step) {
  // std::round rounds halfway cases away from zero, the convention fixed
  // for the binning.
  return step * std::round(x / step);
}

int left_pop_bin(const UserDayPoint& p) {
  if (p.popularity != 0 && p.popularity != 1) {
    throw std::invalid_argument("left-plot binning requires popularity 0 or 1, got " +
                                std::to_string(p.popularity) + " for trader " + p.trader_id);
  }
  return p.popularity;
}

int pop_bin_of(const UserDayPoint& p, BinMode mode) {
  return mode == BinMode::LeftPlot ? left_pop_bin(p) : std::min(p.popularity, 5);
}

double perf_bin_of(double performance, BinMode mode) {
  if (mode == BinMode::LeftPlot) {
    return std::clamp(round_to_multiple(performance, 25.0), -50.0, 50.0);
  }
  return std::clamp(round_to_multiple(performance, 10.0), -40.0, 40.0);
}

}  // namespace

std::string condition_name(const Condition& condition) {
  if (std::holds_alternative<PopZeroOne>(condition)) return "zero-one";
  return "not-top100";
}

DailyPopularityRanks DailyPopularityRanks::build(const PopularityTable& popularity) {
  DailyPopularityRanks ranks;
  ranks.axis_ = popularity.axis;
  ranks.sorted_desc_.assign(ranks.axis_.size(), {});
  for (std::size_t d = 0; d < ranks.axis_.size(); ++d) {
    auto& day_values = ranks.sorted_desc_[d];
    day_values.reserve(popularity.by_trader.size());
    for (const auto& [id, series] : popularity.by_trader) {
      day_values.push_back(series.counts[d]);
    }
    std::sort(day_values.begin(), day_values.end(), std::greater<int>());
  }
  return ranks;
}

std::optional<int> DailyPopularityRanks::kth_value(Date day, int k) const {
  if (k < 1) throw std::invalid_argument("kth_value: k must be >= 1");
  const auto idx = axis_.index_of(day);
  if (!idx) return std::nullopt;
  const auto& day_values = sorted_desc_[*idx];
  if (day_values.size() < static_cast<std::size_t>(k)) return std::nullopt;
  return day_values[static_cast<std::size_t>(k) - 1];
}

std::vector<UserDayPoint> build_points(const PopularityTable& popularity,
                                       const PerformanceTable& performance, DaySpan range) {
  std::vector<UserDayPoint> points;
  const DayAxis& pop_axis = popularity.axis;
  const DayAxis range_axis = DayAxis::over(range);
  for (const auto& [id, pop_series] : popularity.by_trader) {
    const auto perf_it = performance.by_trader.find(id);
    if (perf_it == performance.by_trader.end()) continue;  // never traded
    for (const Date day : range_axis.days()) {
      const auto d = pop_axis.index_of(day);
      if (!d || *d + 1 >= pop_axis.size()) continue;  // no trailing day for the delta
      const auto perf_d = performance.axis.index_of(day);
      if (!perf_d) continue;
      const auto& perf = perf_it->second.values[*perf_d];
      if (!perf) continue;  // inactive user-day
      points.push_back({id, day, pop_series.counts[*d], *perf,
                        pop_series.counts[*d + 1] - pop_series.counts[*d]});
    }
  }
  return points;  // by_trader map + ascending days => sorted by (trader_id, day)
}

std::vector<UserDayPoint> apply_filters(const std::vector<UserDayPoint>& points,
                                        const Condition& condition,
                                        const DailyPopularityRanks& ranks) {
  std::vector<UserDayPoint> kept;
  for (const UserDayPoint& p : points) {
    if (p.delta < 0) continue;  // lost copiers
    if (std::holds_alternative<PopZeroOne>(condition)) {
      if (p.popularity == 0 || p.popularity == 1) kept.push_back(p);
      continue;
    }
    const auto& top = std::get<PopPositiveNotTop100>(condition);
    if (p.popularity <= 0) continue;
    const auto boundary = ranks.kth_value(p.day, top.cutoff);
    // Fewer than `cutoff` traders means everyone is within the top group;
    // ties with the boundary value are excluded as well.
    if (boundary && p.popularity < *boundary) kept.push_back(p);
  }
  return kept;
}

RegressionResult ols_interaction_fit(const std::vector<UserDayPoint>& points) {
  if (points.size() < 5) {
    throw std::invalid_argument("ols_interaction_fit: need at least 5 points, got " +
                                std::to_string(points.size()));
  }
  const std::size_t n = points.size();
  std::vector<std::vector<double>> columns(4, std::vector<double>(n));
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double pop = static_cast<double>(points[i].popularity);
    columns[0][i] = 1.0;
    columns[1][i] = pop;
    columns[2][i] = points[i].performance;
    columns[3][i] = pop * points[i].performance;
    y[i] = static_cast<double>(points[i].delta);
  }
  const std::vector<std::string> names(RegressionResult::term_names.begin(),
                                       RegressionResult::term_names.end());
  const LeastSquaresFit fit = least_squares_fit(columns, y, names);

  RegressionResult result;
  for (std::size_t j = 0; j < 4; ++j) {
    result.coefficients[j] = fit.coefficients[j];
    result.standard_errors[j] = fit.standard_errors[j];
    result.t_stats[j] = fit.t_stats[j];
    result.p_values[j] = fit.p_values[j];
  }
  result.n_obs = fit.n_obs;
  result.degrees_of_freedom = fit.degrees_of_freedom;
  result.r_squared = fit.r_squared;
  return result;
}

std::vector<BinnedCell> bin_summaries(const std::vector<UserDayPoint>& points, BinMode mode) {
  if (points.empty()) throw std::invalid_argument("bin_summaries: no points");
  // Deltas per cell in input order, so the cell statistics are reproducible
  // byte for byte.
  std::map<std::pair<int, double>, std::vector<int>> cells;
  for (const UserDayPoint& p : points) {
    cells[{pop_bin_of(p, mode), perf_bin_of(p.performance, mode)}].push_back(p.delta);
  }
  std::vector<BinnedCell> out;
  out.reserve(cells.size());
  for (const auto& [key, deltas] : cells) {
    BinnedCell cell;
    cell.pop_bin = key.first;
    cell.perf_bin = key.second;
    cell.count = static_cast<long>(deltas.size());
    double sum = 0.0;
    for (int d : deltas) sum += d;
    cell.mean_delta = sum / static_cast<double>(cell.count);
    double ss = 0.0;
    for (int d : deltas) {
      const double r = static_cast<double>(d) - cell.mean_delta;
      ss += r * r;
    }
    const double sd = cell.count > 1 ? std::sqrt(ss / static_cast<double>(cell.count - 1)) : 0.0;
    cell.ci_half_width = kCi95 * sd / std::sqrt(static_cast<double>(cell.count));
    out.push_back(cell);
  }
  return out;  // map order == (pop_bin, perf_bin)
}

std::vector<GroupLine> group_fit_lines(const std::vector<UserDayPoint>& points, BinMode mode) {
  std::map<int, std::vector<const UserDayPoint*>> groups;
  for (const UserDayPoint& p : points) groups[pop_bin_of(p, mode)].push_back(&p);

  std::vector<GroupLine> out;
  for (const auto& [pop_bin, group] : groups) {
    const double n = static_cast<double>(group.size());
    double x_mean = 0.0, y_mean = 0.0;
    for (const auto* p : group) {
      x_mean += p->performance;
      y_mean += p->delta;
    }
    x_mean /= n;
    y_mean /= n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto* p : group) {
      const double dx = p->performance - x_mean;
      sxx += dx * dx;
      sxy += dx * (static_cast<double>(p->delta) - y_mean);
    }
    if (!(sxx > 0.0)) {
      throw SingularColumnError(
          "performance", "group_fit_lines: popularity group " + std::to_string(pop_bin) +
                             " needs at least 2 distinct performance values");
    }
    const double slope = sxy / sxx;
    out.push_back({pop_bin, slope, y_mean - slope * x_mean});
  }
  return out;
}

}  // namespace poptrade
