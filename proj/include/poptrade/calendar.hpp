#ifndef POPTRADE_CALENDAR_HPP
#define POPTRADE_CALENDAR_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace poptrade {

/// Calendar date, stored as a civil day count since 1970-01-01.
/// Business days are Mon-Fri; there is no holiday calendar.
class Date {
 public:
  Date() = default;

  static Date from_ymd(int year, unsigned month, unsigned day);  // throws std::invalid_argument
  static Date from_serial(std::int32_t days_since_epoch);

  /// Parses "YYYY-MM-DD". Returns nullopt on any malformed or invalid date.
  static std::optional<Date> parse_iso(std::string_view text);

  std::string to_iso() const;

  std::int32_t serial() const { return serial_; }
  /// 0 = Monday ... 6 = Sunday.
  int weekday() const;

  Date plus_days(int n) const { return from_serial(serial_ + n); }

  friend auto operator<=>(const Date&, const Date&) = default;

 private:
  std::int32_t serial_ = 0;
};

bool is_business_day(Date d);
Date next_business_day(Date d);
Date prev_business_day(Date d);

/// The `len` business days ending at (and including) `end`, in chronological
/// order. If `end` falls on a weekend the window ends at the preceding
/// business day.
std::vector<Date> window_ending(Date end, int len);

/// All business days in [first, last], inclusive.
std::vector<Date> business_days(Date first, Date last);

/// An inclusive span of calendar days, iterated over business days only.
struct DaySpan {
  Date first;
  Date last;
};

}  // namespace poptrade

#endif  // POPTRADE_CALENDAR_HPP
