#include <doctest.h>

#include "tzeff/contracts.hpp"
#include "tzeff/dates.hpp"
#include "tzeff/errors.hpp"

using namespace tzeff;

TEST_CASE("date parse/format round trip") {
  Date d = parse_date("2013-01-15");
  CHECK(year_of(d) == 2013);
  CHECK(month_of(d) == 1);
  CHECK(day_of(d) == 15);
  CHECK(format_date(d) == "2013-01-15");

  CHECK_THROWS_AS(parse_date("2013/01/15"), Error);
  CHECK_THROWS_AS(parse_date("2013-13-01"), Error);
  CHECK_THROWS_AS(parse_date("2013-02-30"), Error);
  CHECK_THROWS_AS(parse_date("13-02-03"), Error);
}

TEST_CASE("calendar derivations") {
  Date d = parse_date("2012-08-17");
  CHECK(quarter_of(d) == 3);
  CHECK(month_within_quarter(d) == 2);
  CHECK(month_of(end_of_month(2012, 2)) == 2);
  CHECK(day_of(end_of_month(2012, 2)) == 29);  // leap year
  CHECK(day_of(end_of_month(2013, 2)) == 28);
  CHECK(format_date(add_months_first_day(d, 5)) == "2013-01-01");
  CHECK(format_date(add_months_first_day(d, 0)) == "2012-08-01");
}

TEST_CASE("month_within_quarter identity") {
  for (int m = 1; m <= 12; ++m) {
    Date d = make_date(2014, m, 10);
    CHECK(month_within_quarter(d) == (m - 1) % 3 + 1);
  }
}

TEST_CASE("business calendar skips weekends and holidays") {
  BusinessCalendar plain;
  // 2013-02-01 is a Friday.
  CHECK(plain.first_business_day_of_month(2013, 2) == parse_date("2013-02-01"));
  // 2012-01-01 is a Sunday.
  CHECK(plain.first_business_day_of_month(2012, 1) == parse_date("2012-01-02"));

  BusinessCalendar with_holiday({parse_date("2012-01-02")});
  CHECK(with_holiday.first_business_day_of_month(2012, 1) == parse_date("2012-01-03"));

  auto days = plain.business_days(parse_date("2013-02-01"), parse_date("2013-02-10"));
  CHECK(days.size() == 6);  // Fri + Mon..Fri
}

TEST_CASE("trading day rejects weekends") {
  CHECK_THROWS_AS(TradingDay::of(parse_date("2013-02-02")), Error);  // Saturday
  TradingDay t = TradingDay::of(parse_date("2013-02-04"));
  CHECK(t.month_of_year() == 2);
  CHECK(t.quarter_of_year() == 1);
  CHECK(t.month_within_quarter() == 2);
}

TEST_CASE("label canonical text round trips") {
  for (int j = 1; j <= 6; ++j) {
    ContractLabel l = ContractLabel::monthly(j);
    CHECK(ContractLabel::parse(l.str()) == l);
  }
  for (int b = 1; b <= 7; ++b) {
    for (int c = 1; c <= 4; ++c) {
      ContractLabel l = ContractLabel::quarterly(b, c);
      CHECK(l.str() == "Q" + std::to_string(b) + std::to_string(c));
      CHECK(ContractLabel::parse(l.str()) == l);
    }
  }
  CHECK(ContractLabel::parse("Y1") == ContractLabel::yearly());
}

TEST_CASE("label range checks") {
  CHECK_THROWS_AS(ContractLabel::monthly(0), Error);
  CHECK_THROWS_AS(ContractLabel::monthly(7), Error);
  CHECK_THROWS_AS(ContractLabel::quarterly(8, 1), Error);
  CHECK_THROWS_AS(ContractLabel::quarterly(1, 5), Error);
  CHECK_THROWS_AS(ContractLabel::yearly(2), Error);
  CHECK_THROWS_AS(ContractLabel::parse("M9"), Error);
  CHECK_THROWS_AS(ContractLabel::parse("Q1"), Error);
  CHECK_THROWS_AS(ContractLabel::parse("Z1"), Error);
  CHECK_THROWS_AS(ContractLabel::parse(""), Error);

  // Error messages carry the offending label text.
  try {
    ContractLabel::parse("M9");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("M9") != std::string::npos);
    CHECK(e.code() == Errc::InvalidLabel);
  }
}
