#ifndef POPTRADE_INGEST_HPP
#define POPTRADE_INGEST_HPP

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "poptrade/calendar.hpp"

namespace poptrade {

/// One closed trade: the trader, the close date, and the trade's expected
/// daily return in percent (treated as an opaque per-trade number).
struct TradeRecord {
  std::string trader_id;
  Date close_date;
  double daily_return = 0.0;
};

/// One mirror relationship: copier_id copies target_id from start_date until
/// end_date (exclusive); an absent end_date means the mirror is still open.
struct MirrorEvent {
  std::string copier_id;
  std::string target_id;
  Date start_date;
  std::optional<Date> end_date;
};

/// CSV parse failure with the 1-based line number of the offending row.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line),
        message_(message) {}
  std::size_t line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

/// Parses `trader_id,close_date,daily_return` rows (ISO dates, finite
/// returns). Throws ParseError on the first malformed row.
std::vector<TradeRecord> parse_trades(std::istream& in);

/// Parses `copier_id,target_id,start_date,end_date` rows; an empty end_date
/// means still open. end_date < start_date is a validation error.
std::vector<MirrorEvent> parse_mirrors(std::istream& in);

/// Contiguous business-day axis over an inclusive span, with date->index
/// lookup.
class DayAxis {
 public:
  static DayAxis over(DaySpan span);

  std::size_t size() const { return days_.size(); }
  Date day(std::size_t i) const { return days_[i]; }
  const std::vector<Date>& days() const { return days_; }

  /// Index of the first axis day >= d (== size() when past the end).
  std::size_t lower_bound(Date d) const;
  /// Exact index of a business day on the axis, or nullopt.
  std::optional<std::size_t> index_of(Date d) const;

 private:
  std::vector<Date> days_;
};

/// Copier count per business day for one trader (aligned to a DayAxis).
struct PopularitySeries {
  std::vector<int> counts;
};

/// Rolling performance per business day; absent when the trader had no
/// closed trades anywhere in the day's window.
struct PerformanceSeries {
  std::vector<std::optional<double>> values;
};

struct PopularityTable {
  DayAxis axis;
  std::map<std::string, PopularitySeries> by_trader;
};

struct PerformanceTable {
  DayAxis axis;
  std::map<std::string, PerformanceSeries> by_trader;
};

/// End-of-day copier counts per target: an event is counted on day d when
/// start_date <= d and (no end_date or end_date > d). Targets without events
/// appear (zero-filled) only when listed in `roster`.
PopularityTable reconstruct_popularity(const std::vector<MirrorEvent>& events, DaySpan range,
                                       const std::vector<std::string>* roster = nullptr);

/// Two-stage average shared by the simulator and the ingest pipeline: mean
/// of the per-day means over the window days that have any activity, in
/// chronological order. Returns nullopt when no day is active.
std::optional<double> mean_over_active_days(std::span<const std::optional<double>> day_means);

/// Rolling performance for one trader's trades at `day`: the mean over the
/// active days of the window_len-business-day window ending at (and
/// including) `day` of that day's mean daily return.
std::optional<double> rolling_performance(const std::vector<TradeRecord>& trades, Date day,
                                          int window_len = 5);

/// rolling_performance evaluated for every trader and every business day of
/// `range` in one pass.
PerformanceTable performance_table(const std::vector<TradeRecord>& trades, DaySpan range,
                                   int window_len = 5);

}  // namespace poptrade

#endif  // POPTRADE_INGEST_HPP
