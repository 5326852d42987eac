#include "poptrade/calendar.hpp"

#include <stdexcept>

#include <doctest.h>

#include "poptrade/rng.hpp"

using namespace poptrade;

TEST_CASE("iso parsing round trips and rejects junk") {
  const auto d = Date::parse_iso("2011-09-12");
  REQUIRE(d.has_value());
  CHECK(d->to_iso() == "2011-09-12");

  CHECK_FALSE(Date::parse_iso("2011-13-40").has_value());
  CHECK_FALSE(Date::parse_iso("2011-02-30").has_value());
  CHECK_FALSE(Date::parse_iso("2011-9-12").has_value());
  CHECK_FALSE(Date::parse_iso("2011/09/12").has_value());
  CHECK_FALSE(Date::parse_iso("").has_value());
  CHECK_FALSE(Date::parse_iso("2011-09-12 ").has_value());

  CHECK(Date::parse_iso("2012-02-29").has_value());  // leap day
  CHECK_FALSE(Date::parse_iso("2011-02-29").has_value());
}

TEST_CASE("from_ymd validates") {
  CHECK(Date::from_ymd(2011, 9, 9).to_iso() == "2011-09-09");
  CHECK_THROWS_AS(Date::from_ymd(2011, 13, 40), std::invalid_argument);
}

TEST_CASE("weekends are not business days") {
  CHECK(is_business_day(Date::from_ymd(2011, 9, 9)));         // Friday
  CHECK_FALSE(is_business_day(Date::from_ymd(2011, 9, 10)));  // Saturday
  CHECK_FALSE(is_business_day(Date::from_ymd(2011, 9, 11)));  // Sunday
  CHECK(is_business_day(Date::from_ymd(2011, 9, 12)));        // Monday
}

TEST_CASE("next/prev business day skip the weekend") {
  CHECK(next_business_day(Date::from_ymd(2011, 9, 9)) == Date::from_ymd(2011, 9, 12));
  CHECK(prev_business_day(Date::from_ymd(2011, 9, 12)) == Date::from_ymd(2011, 9, 9));
  CHECK(next_business_day(Date::from_ymd(2011, 9, 12)) == Date::from_ymd(2011, 9, 13));
}

TEST_CASE("window_ending spans the weekend") {
  // Monday 2011-09-12: previous Tue, Wed, Thu, Fri, then Monday itself.
  const auto w = window_ending(Date::from_ymd(2011, 9, 12), 5);
  REQUIRE(w.size() == 5);
  CHECK(w[0] == Date::from_ymd(2011, 9, 6));
  CHECK(w[1] == Date::from_ymd(2011, 9, 7));
  CHECK(w[2] == Date::from_ymd(2011, 9, 8));
  CHECK(w[3] == Date::from_ymd(2011, 9, 9));
  CHECK(w[4] == Date::from_ymd(2011, 9, 12));
}

TEST_CASE("window_ending on a weekend ends at the preceding business day") {
  const auto w = window_ending(Date::from_ymd(2011, 9, 10), 2);  // Saturday
  REQUIRE(w.size() == 2);
  CHECK(w[1] == Date::from_ymd(2011, 9, 9));
}

TEST_CASE("window_ending property: exactly len business days, none after the query") {
  Rng rng(42);
  const Date base = Date::from_ymd(2011, 1, 1);
  for (int trial = 0; trial < 300; ++trial) {
    const Date query = base.plus_days(static_cast<int>(rng.next_u64() % 2000));
    const int len = 1 + static_cast<int>(rng.next_u64() % 12);
    const auto w = window_ending(query, len);
    REQUIRE(w.size() == static_cast<std::size_t>(len));
    for (std::size_t i = 0; i < w.size(); ++i) {
      CHECK(is_business_day(w[i]));
      CHECK(w[i] <= query);
      if (i > 0) CHECK(w[i - 1] < w[i]);
    }
    for (std::size_t i = 1; i < w.size(); ++i) {
      CHECK(next_business_day(w[i - 1]) == w[i]);  // no business day skipped
    }
  }
}

TEST_CASE("business_days enumerates an inclusive span") {
  const auto days = business_days(Date::from_ymd(2011, 9, 9), Date::from_ymd(2011, 9, 13));
  REQUIRE(days.size() == 3);  // Fri, Mon, Tue
  CHECK(days[0] == Date::from_ymd(2011, 9, 9));
  CHECK(days[1] == Date::from_ymd(2011, 9, 12));
  CHECK(days[2] == Date::from_ymd(2011, 9, 13));
}
