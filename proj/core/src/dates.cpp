#include "tzeff/dates.hpp"

#include <algorithm>
#include <charconv>

#include "tzeff/errors.hpp"

namespace tzeff {

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    fail(Errc::ParseError, "bad integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Date parse_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
    fail(Errc::ParseError, "bad date '" + std::string(text) + "', expected YYYY-MM-DD");
  }
  int y = parse_int(text.substr(0, 4));
  int m = parse_int(text.substr(5, 2));
  int d = parse_int(text.substr(8, 2));
  Date date = make_date(y, m, d);
  if (!date.ok()) {
    fail(Errc::ParseError, "invalid calendar date '" + std::string(text) + "'");
  }
  return date;
}

std::string format_date(Date d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year_of(d), month_of(d), day_of(d));
  return buf;
}

Date make_date(int year, int month, int day) {
  return Date{std::chrono::year{year}, std::chrono::month{unsigned(month)},
              std::chrono::day{unsigned(day)}};
}

bool is_weekend(Date d) {
  std::chrono::weekday wd{std::chrono::sys_days{d}};
  return wd == std::chrono::Saturday || wd == std::chrono::Sunday;
}

Date end_of_month(int year, int month) {
  auto last = std::chrono::year{year} / std::chrono::month{unsigned(month)} / std::chrono::last;
  return Date{last};
}

Date add_months_first_day(Date d, int k) {
  int idx = month_index(d) + k;
  int y = idx / 12;
  int m = idx % 12;
  if (m < 0) {  // negative k past a year boundary
    y -= 1;
    m += 12;
  }
  return make_date(y, m + 1, 1);
}

BusinessCalendar::BusinessCalendar(std::vector<Date> holidays)
    : holidays_(holidays.begin(), holidays.end()) {}

bool BusinessCalendar::is_business_day(Date d) const {
  return !is_weekend(d) && !holidays_.contains(d);
}

Date BusinessCalendar::next_business_day(Date d) const {
  std::chrono::sys_days sd{d};
  Date cur = d;
  while (!is_business_day(cur)) {
    sd += std::chrono::days{1};
    cur = Date{sd};
  }
  return cur;
}

Date BusinessCalendar::first_business_day_of_month(int year, int month) const {
  return next_business_day(make_date(year, month, 1));
}

std::vector<Date> BusinessCalendar::business_days(Date from, Date to) const {
  std::vector<Date> out;
  for (std::chrono::sys_days sd{from}; sd <= std::chrono::sys_days{to};
       sd += std::chrono::days{1}) {
    Date d{sd};
    if (is_business_day(d)) out.push_back(d);
  }
  return out;
}

TradingDay TradingDay::of(Date d) {
  if (is_weekend(d)) {
    fail(Errc::ParseError, "not a trading day (weekend): " + format_date(d));
  }
  return TradingDay{d};
}

}  // namespace tzeff
