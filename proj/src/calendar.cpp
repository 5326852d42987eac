#include "poptrade/calendar.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <stdexcept>

namespace poptrade {

namespace {

std::chrono::sys_days to_sys_days(Date d) {
  return std::chrono::sys_days{std::chrono::days{d.serial()}};
}

}  // namespace

Date Date::from_ymd(int year, unsigned month, unsigned day) {
  const std::chrono::year_month_day ymd{std::chrono::year{year},
                                        std::chrono::month{month},
                                        std::chrono::day{day}};
  if (!ymd.ok()) {
    throw std::invalid_argument("invalid calendar date: " + std::to_string(year) + "-" +
                                std::to_string(month) + "-" + std::to_string(day));
  }
  return from_serial(
      static_cast<std::int32_t>(std::chrono::sys_days{ymd}.time_since_epoch().count()));
}

Date Date::from_serial(std::int32_t days_since_epoch) {
  Date d;
  d.serial_ = days_since_epoch;
  return d;
}

std::optional<Date> Date::parse_iso(std::string_view text) {
  // Strict YYYY-MM-DD, no whitespace.
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  auto parse_int = [](std::string_view s, int& out) {
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
  };
  int y = 0, m = 0, d = 0;
  if (!parse_int(text.substr(0, 4), y) || !parse_int(text.substr(5, 2), m) ||
      !parse_int(text.substr(8, 2), d)) {
    return std::nullopt;
  }
  const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(m)},
                                        std::chrono::day{unsigned(d)}};
  if (!ymd.ok()) return std::nullopt;
  return from_serial(
      static_cast<std::int32_t>(std::chrono::sys_days{ymd}.time_since_epoch().count()));
}

std::string Date::to_iso() const {
  const std::chrono::year_month_day ymd{to_sys_days(*this)};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

int Date::weekday() const {
  const std::chrono::weekday wd{to_sys_days(*this)};
  // iso_encoding: Mon=1..Sun=7 -> 0-based Monday.
  return static_cast<int>(wd.iso_encoding()) - 1;
}

bool is_business_day(Date d) { return d.weekday() < 5; }

Date next_business_day(Date d) {
  do {
    d = d.plus_days(1);
  } while (!is_business_day(d));
  return d;
}

Date prev_business_day(Date d) {
  do {
    d = d.plus_days(-1);
  } while (!is_business_day(d));
  return d;
}

std::vector<Date> window_ending(Date end, int len) {
  if (len < 1) throw std::invalid_argument("window_ending: len must be >= 1");
  Date d = is_business_day(end) ? end : prev_business_day(end);
  std::vector<Date> out(static_cast<std::size_t>(len));
  for (int i = len - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = d;
    if (i > 0) d = prev_business_day(d);
  }
  return out;
}

std::vector<Date> business_days(Date first, Date last) {
  std::vector<Date> out;
  for (Date d = first; d <= last; d = d.plus_days(1)) {
    if (is_business_day(d)) out.push_back(d);
  }
  return out;
}

}  // namespace poptrade
