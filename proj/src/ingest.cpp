#include "poptrade/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace poptrade {

namespace {

// Splits one CSV line on commas. The defined formats need no quoting.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      out.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

double parse_finite_double(std::string_view text, std::size_t line_no, const char* what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ParseError(line_no, std::string(what) + ": expected a finite number, got '" +
                                  std::string(text) + "'");
  }
  return value;
}

Date parse_date_field(std::string_view text, std::size_t line_no, const char* what) {
  const auto d = Date::parse_iso(text);
  if (!d) {
    throw ParseError(line_no,
                     std::string(what) + ": invalid ISO date '" + std::string(text) + "'");
  }
  return *d;
}

void expect_header(std::istream& in, std::string_view expected) {
  std::string line;
  if (!read_line(in, line)) throw ParseError(1, "missing header row");
  if (line != expected) {
    throw ParseError(1, "expected header '" + std::string(expected) + "', got '" + line + "'");
  }
}

}  // namespace

std::vector<TradeRecord> parse_trades(std::istream& in) {
  expect_header(in, "trader_id,close_date,daily_return");
  std::vector<TradeRecord> out;
  std::string line;
  for (std::size_t line_no = 2; read_line(in, line); ++line_no) {
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 3) {
      throw ParseError(line_no, "expected 3 fields, got " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw ParseError(line_no, "empty trader_id");
    out.push_back({std::string(fields[0]), parse_date_field(fields[1], line_no, "close_date"),
                   parse_finite_double(fields[2], line_no, "daily_return")});
  }
  return out;
}

std::vector<MirrorEvent> parse_mirrors(std::istream& in) {
  expect_header(in, "copier_id,target_id,start_date,end_date");
  std::vector<MirrorEvent> out;
  std::string line;
  for (std::size_t line_no = 2; read_line(in, line); ++line_no) {
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 4) {
      throw ParseError(line_no, "expected 4 fields, got " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw ParseError(line_no, "empty copier_id");
    if (fields[1].empty()) throw ParseError(line_no, "empty target_id");
    MirrorEvent ev;
    ev.copier_id = std::string(fields[0]);
    ev.target_id = std::string(fields[1]);
    ev.start_date = parse_date_field(fields[2], line_no, "start_date");
    if (!fields[3].empty()) {
      ev.end_date = parse_date_field(fields[3], line_no, "end_date");
      if (*ev.end_date < ev.start_date) {
        throw ParseError(line_no, "end_date precedes start_date");
      }
    }
    out.push_back(std::move(ev));
  }
  return out;
}

DayAxis DayAxis::over(DaySpan span) {
  DayAxis axis;
  axis.days_ = business_days(span.first, span.last);
  return axis;
}

std::size_t DayAxis::lower_bound(Date d) const {
  return static_cast<std::size_t>(std::lower_bound(days_.begin(), days_.end(), d) - days_.begin());
}

std::optional<std::size_t> DayAxis::index_of(Date d) const {
  const std::size_t i = lower_bound(d);
  if (i < days_.size() && days_[i] == d) return i;
  return std::nullopt;
}

PopularityTable reconstruct_popularity(const std::vector<MirrorEvent>& events, DaySpan range,
                                       const std::vector<std::string>* roster) {
  PopularityTable table;
  table.axis = DayAxis::over(range);
  const std::size_t n_days = table.axis.size();

  if (roster != nullptr) {
    for (const auto& id : *roster) {
      table.by_trader[id].counts.assign(n_days, 0);
    }
  }
  if (n_days == 0) return table;

  // Difference array per target: +1 at the first axis day >= start, -1 at
  // the first axis day >= end (end-exclusive snapshot).
  for (const MirrorEvent& ev : events) {
    auto& series = table.by_trader[ev.target_id];
    if (series.counts.empty()) series.counts.assign(n_days, 0);
    const std::size_t from = table.axis.lower_bound(ev.start_date);
    const std::size_t to = ev.end_date ? table.axis.lower_bound(*ev.end_date) : n_days;
    if (from >= to) continue;
    if (from < n_days) series.counts[from] += 1;
    if (to < n_days) series.counts[to] -= 1;
  }
  for (auto& [id, series] : table.by_trader) {
    int running = 0;
    for (int& c : series.counts) {
      running += c;
      c = running;
    }
  }
  return table;
}

std::optional<double> mean_over_active_days(std::span<const std::optional<double>> day_means) {
  double sum = 0.0;
  int active = 0;
  for (const auto& m : day_means) {
    if (m) {
      sum += *m;
      ++active;
    }
  }
  if (active == 0) return std::nullopt;
  return sum / active;
}

namespace {

// Per-day mean with the returns sorted first, so the result does not depend
// on the order the records arrived in.
std::optional<double> day_mean(std::vector<double>& returns) {
  if (returns.empty()) return std::nullopt;
  std::sort(returns.begin(), returns.end());
  double sum = 0.0;
  for (double r : returns) sum += r;
  return sum / static_cast<double>(returns.size());
}

}  // namespace

std::optional<double> rolling_performance(const std::vector<TradeRecord>& trades, Date day,
                                          int window_len) {
  if (window_len < 1) throw std::invalid_argument("rolling_performance: window_len must be >= 1");
  const std::vector<Date> window = window_ending(day, window_len);
  std::vector<std::optional<double>> day_means(window.size());
  for (std::size_t i = 0; i < window.size(); ++i) {
    std::vector<double> returns;
    for (const TradeRecord& tr : trades) {
      if (tr.close_date == window[i]) returns.push_back(tr.daily_return);
    }
    day_means[i] = day_mean(returns);
  }
  return mean_over_active_days(day_means);
}

PerformanceTable performance_table(const std::vector<TradeRecord>& trades, DaySpan range,
                                   int window_len) {
  if (window_len < 1) throw std::invalid_argument("performance_table: window_len must be >= 1");
  PerformanceTable table;
  table.axis = DayAxis::over(range);
  const std::size_t n_days = table.axis.size();
  if (n_days == 0) return table;

  // Extended axis reaching back so the first range day has a full window.
  Date ext_first = table.axis.day(0);
  for (int i = 1; i < window_len; ++i) ext_first = prev_business_day(ext_first);
  const DayAxis ext = DayAxis::over({ext_first, table.axis.day(n_days - 1)});

  std::map<std::string, std::vector<std::vector<double>>> buckets;
  for (const TradeRecord& tr : trades) {
    const auto idx = ext.index_of(tr.close_date);
    if (!idx) continue;  // outside the window reach, or a non-business day
    auto& row = buckets[tr.trader_id];
    if (row.empty()) row.resize(ext.size());
    row[*idx].push_back(tr.daily_return);
  }

  const std::size_t offset = ext.size() - n_days;  // == window_len - 1
  for (auto& [id, row] : buckets) {
    std::vector<std::optional<double>> day_means(ext.size());
    for (std::size_t i = 0; i < ext.size(); ++i) {
      day_means[i] = day_mean(row[i]);
    }
    auto& series = table.by_trader[id];
    series.values.resize(n_days);
    for (std::size_t d = 0; d < n_days; ++d) {
      const std::size_t end = offset + d + 1;
      const std::size_t begin = end - static_cast<std::size_t>(window_len);
      series.values[d] = mean_over_active_days(
          std::span<const std::optional<double>>(day_means.data() + begin,
                                                 static_cast<std::size_t>(window_len)));
    }
  }
  return table;
}

}  // namespace poptrade
