#ifndef POPTRADE_ANALYSIS_HPP
#define POPTRADE_ANALYSIS_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "poptrade/calendar.hpp"
#include "poptrade/ingest.hpp"
#include "poptrade/regression.hpp"

namespace poptrade {

/// One regression observation: popularity and performance through `day`,
/// and the next-business-day change in popularity.
struct UserDayPoint {
  std::string trader_id;
  Date day;
  int popularity = 0;      // n_d
  double performance = 0;  // rolling metric through day d
  int delta = 0;           // n_{d+1} - n_d
};

/// Position-bias controls: user-days with popularity 0 or 1, or user-days
/// with positive popularity outside the day's top-`cutoff` most popular.
struct PopZeroOne {};
struct PopPositiveNotTop100 {
  int cutoff = 100;
};
using Condition = std::variant<PopZeroOne, PopPositiveNotTop100>;

std::string condition_name(const Condition& condition);  // "zero-one" / "not-top100"

/// Per-day popularity order statistics over all traders, for the top-K
/// exclusion. Ties at the boundary are handled conservatively: a trader
/// whose popularity equals the cutoff-th largest value counts as top-K.
class DailyPopularityRanks {
 public:
  static DailyPopularityRanks build(const PopularityTable& popularity);

  /// The k-th largest popularity on `day` (1-based), or nullopt when fewer
  /// than k traders are known or the day is off the axis.
  std::optional<int> kth_value(Date day, int k) const;

 private:
  DayAxis axis_;
  std::vector<std::vector<int>> sorted_desc_;
};

/// Builds one point per (trader, business day of range) where the rolling
/// performance is defined and the next business day's popularity is known.
/// Points come out sorted by (trader_id, day).
std::vector<UserDayPoint> build_points(const PopularityTable& popularity,
                                       const PerformanceTable& performance, DaySpan range);

/// Keeps points that did not lose copiers (delta >= 0) and satisfy the
/// condition's popularity predicate.
std::vector<UserDayPoint> apply_filters(const std::vector<UserDayPoint>& points,
                                        const Condition& condition,
                                        const DailyPopularityRanks& ranks);

struct RegressionResult {
  static constexpr std::array<const char*, 4> term_names = {"intercept", "popularity",
                                                            "performance",
                                                            "popularity_x_performance"};
  std::array<double, 4> coefficients{};
  std::array<double, 4> standard_errors{};
  std::array<double, 4> t_stats{};
  std::array<double, 4> p_values{};
  long n_obs = 0;
  long degrees_of_freedom = 0;  // n_obs - 4
  double r_squared = 0.0;
};

/// OLS of delta on {1, popularity, performance, popularity*performance} via
/// Householder QR, with two-sided Student-t p-values on n-4 dof. Throws
/// SingularColumnError naming the offending column on rank deficiency, and
/// std::invalid_argument when fewer than 5 points are supplied.
RegressionResult ols_interaction_fit(const std::vector<UserDayPoint>& points);

enum class BinMode { LeftPlot, RightPlot };

struct BinnedCell {
  int pop_bin = 0;
  double perf_bin = 0.0;
  double mean_delta = 0.0;
  long count = 0;
  double ci_half_width = 0.0;  // 1.959964 * sample sd / sqrt(count)
};

/// Figure-style cell summaries. LeftPlot: performance rounded to the
/// nearest multiple of 25 and clamped to [-50, 50], popularity must be 0 or
/// 1. RightPlot: performance rounded to the nearest 10 and clamped to
/// [-40, 40], popularity binned as min(popularity, 5). Halves round away
/// from zero. Cells are sorted by (pop_bin, perf_bin).
std::vector<BinnedCell> bin_summaries(const std::vector<UserDayPoint>& points, BinMode mode);

struct GroupLine {
  int pop_bin = 0;
  double slope = 0.0;
  double intercept = 0.0;
};

/// Simple OLS of delta on raw (unbinned) performance within each popularity
/// group of the mode's binning. A group needs >= 2 distinct performance
/// values.
std::vector<GroupLine> group_fit_lines(const std::vector<UserDayPoint>& points, BinMode mode);

}  // namespace poptrade

#endif  // POPTRADE_ANALYSIS_HPP
