#pragma once

#include <chrono>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tzeff {

using Date = std::chrono::year_month_day;

// ISO-8601 (YYYY-MM-DD). Throws Errc::ParseError on bad input.
Date parse_date(std::string_view text);
std::string format_date(Date d);

Date make_date(int year, int month, int day);

inline int year_of(Date d) { return int(d.year()); }
inline int month_of(Date d) { return int(unsigned(d.month())); }
inline int day_of(Date d) { return int(unsigned(d.day())); }
inline int quarter_of(Date d) { return (month_of(d) - 1) / 3 + 1; }
inline int month_within_quarter(Date d) { return (month_of(d) - 1) % 3 + 1; }

// Absolute month count, usable for month arithmetic across year boundaries.
inline int month_index(Date d) { return year_of(d) * 12 + (month_of(d) - 1); }

bool is_weekend(Date d);
Date end_of_month(int year, int month);

// First day of the month `k` months after d's month.
Date add_months_first_day(Date d, int k);

// Weekday calendar minus an explicit holiday list. Weekends are always
// excluded; exchange holidays come from configuration.
class BusinessCalendar {
public:
  BusinessCalendar() = default;
  explicit BusinessCalendar(std::vector<Date> holidays);

  bool is_business_day(Date d) const;
  Date next_business_day(Date d) const;       // first business day >= d
  Date first_business_day_of_month(int year, int month) const;

  // All business days in [from, to], inclusive.
  std::vector<Date> business_days(Date from, Date to) const;

private:
  std::set<Date> holidays_;
};

// Calendar date restricted to weekdays (exchange trading grid).
struct TradingDay {
  Date date;

  static TradingDay of(Date d);  // throws if d falls on a weekend

  int month_of_year() const { return month_of(date); }
  int quarter_of_year() const { return quarter_of(date); }
  int month_within_quarter() const { return tzeff::month_within_quarter(date); }
};

}  // namespace tzeff
