#include "tzeff/series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "tzeff/errors.hpp"

namespace tzeff {

namespace {

// First day of the quarter containing d, k quarters ahead.
Date quarter_start(Date d, int k) {
  int qsm = (quarter_of(d) - 1) * 3;  // 0-based month of this quarter's start
  int idx = year_of(d) * 12 + qsm + 3 * k;
  return make_date(idx / 12, idx % 12 + 1, 1);
}

}  // namespace

DeliveryPeriod delivery_period(ContractLabel label, Date t) {
  switch (label.segment) {
    case Segment::Monthly: {
      if (label.index < 1 || label.index > kMaxMonthlyIndex) {
        fail(Errc::InvalidLabel, "bad label " + label.str());
      }
      Date start = add_months_first_day(t, label.index);
      return {start, end_of_month(year_of(start), month_of(start))};
    }
    case Segment::Quarterly: {
      if (label.index < 1 || label.index > kMaxQuarterlyIndex) {
        fail(Errc::InvalidLabel, "bad label " + label.str());
      }
      if (label.trade_quarter != quarter_of(t)) {
        fail(Errc::InvalidLabel,
             "label " + label.str() + " does not trade in quarter " +
                 std::to_string(quarter_of(t)) + " (" + format_date(t) + ")");
      }
      Date start = quarter_start(t, label.index);
      Date last_month = add_months_first_day(start, 2);
      return {start, end_of_month(year_of(last_month), month_of(last_month))};
    }
    case Segment::Yearly: {
      if (label.index != 1) fail(Errc::InvalidLabel, "bad label " + label.str());
      int y = year_of(t) + label.index;
      return {make_date(y, 1, 1), make_date(y, 12, 31)};
    }
  }
  fail(Errc::InvalidLabel, "bad label");
}

Date roll_date(ContractLabel label, Date t, const BusinessCalendar& cal) {
  switch (label.segment) {
    case Segment::Monthly:
      return cal.next_business_day(add_months_first_day(t, 1));
    case Segment::Quarterly:
      return cal.next_business_day(quarter_start(t, 1));
    case Segment::Yearly:
      return cal.next_business_day(make_date(year_of(t) + 1, 1, 1));
  }
  fail(Errc::InvalidLabel, "bad label");
}

bool label_trades_on(ContractLabel label, Date t) {
  return label.segment != Segment::Quarterly || label.trade_quarter == quarter_of(t);
}

std::string underlying_contract_code(ContractLabel label, Date t) {
  DeliveryPeriod dp = delivery_period(label, t);
  char buf[16];
  switch (label.segment) {
    case Segment::Monthly:
      std::snprintf(buf, sizeof(buf), "M-%04d-%02d", year_of(dp.start), month_of(dp.start));
      break;
    case Segment::Quarterly:
      std::snprintf(buf, sizeof(buf), "Q-%04dQ%d", year_of(dp.start), quarter_of(dp.start));
      break;
    case Segment::Yearly:
      std::snprintf(buf, sizeof(buf), "Y-%04d", year_of(dp.start));
      break;
  }
  return buf;
}

std::optional<ContractKey> parse_contract_code(std::string_view code) {
  auto num = [](std::string_view s, int& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
  };
  int y = 0, sub = 0;
  if (code.size() == 9 && code.starts_with("M-") && code[6] == '-') {
    if (num(code.substr(2, 4), y) && num(code.substr(7, 2), sub) && sub >= 1 && sub <= 12) {
      return ContractKey{Segment::Monthly, make_date(y, sub, 1)};
    }
  } else if (code.size() == 8 && code.starts_with("Q-") && code[6] == 'Q') {
    if (num(code.substr(2, 4), y) && num(code.substr(7, 1), sub) && sub >= 1 && sub <= 4) {
      return ContractKey{Segment::Quarterly, make_date(y, (sub - 1) * 3 + 1, 1)};
    }
  } else if (code.size() == 6 && code.starts_with("Y-")) {
    if (num(code.substr(2, 4), y)) {
      return ContractKey{Segment::Yearly, make_date(y, 1, 1)};
    }
  }
  return std::nullopt;
}

ContinuousSeries::ContinuousSeries(ContractLabel label, std::string name,
                                   std::vector<SeriesRow> rows, std::vector<RollEvent> roll_log)
    : label_(label), name_(std::move(name)), rows_(std::move(rows)),
      roll_log_(std::move(roll_log)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const SeriesRow& r = rows_[i];
    if (!std::isfinite(r.price) || r.price <= 0.0) {
      fail(Errc::NonPositivePrice,
           name_ + ": price " + std::to_string(r.price) + " on " + format_date(r.date));
    }
    if (r.volume < 0.0) {
      fail(Errc::InvalidSeries, name_ + ": negative volume on " + format_date(r.date));
    }
    if (i > 0 && !(rows_[i - 1].date < r.date)) {
      fail(Errc::InvalidSeries, name_ + ": dates not strictly increasing at " + format_date(r.date));
    }
  }
}

std::vector<Date> ContinuousSeries::dates() const {
  std::vector<Date> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.date);
  return out;
}

std::vector<double> ContinuousSeries::prices() const {
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.price);
  return out;
}

std::vector<double> ContinuousSeries::volumes() const {
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.volume);
  return out;
}

const SeriesRow* ContinuousSeries::find(Date d) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), d,
                             [](const SeriesRow& r, Date x) { return r.date < x; });
  if (it == rows_.end() || it->date != d) return nullptr;
  return &*it;
}

ContinuousSeries build_continuous_series(std::span<const PriceObservation> observations,
                                         ContractLabel label, const SeriesBuildOptions& options) {
  // Index observations of the label's segment by (contract, date).
  std::map<std::string, std::map<Date, const PriceObservation*>> by_contract;
  bool any = false;
  Date lo{}, hi{};
  for (const auto& obs : observations) {
    auto key = parse_contract_code(obs.contract_code);
    if (!key || key->segment != label.segment) continue;
    auto [it, inserted] = by_contract[obs.contract_code].emplace(obs.date, &obs);
    if (!inserted) {
      fail(Errc::DuplicateKey, "duplicate observation for " + obs.contract_code + " on " +
                                   format_date(obs.date));
    }
    if (!any || obs.date < lo) lo = obs.date;
    if (!any || hi < obs.date) hi = obs.date;
    any = true;
  }
  if (!any) {
    fail(Errc::EmptySeries, "no observations for segment of label " + label.str());
  }

  struct RawRow {
    Date date;
    double price;
    double volume;
    bool carried;
    std::string code;
  };
  std::vector<RawRow> raw;
  int missing_run = 0;
  Date missing_from{};
  bool started = false;
  for (Date d : options.calendar.business_days(lo, hi)) {
    if (!label_trades_on(label, d)) continue;
    std::string code = underlying_contract_code(label, d);
    const PriceObservation* obs = nullptr;
    if (auto ct = by_contract.find(code); ct != by_contract.end()) {
      if (auto at = ct->second.find(d); at != ct->second.end()) obs = at->second;
    }
    if (obs) {
      raw.push_back({d, obs->settle, obs->volume, false, std::move(code)});
      missing_run = 0;
      started = true;
    } else if (started) {
      if (missing_run == 0) missing_from = d;
      if (++missing_run > options.gap_limit) {
        fail(Errc::GapTooLong, label.str() + ": " + std::to_string(missing_run) +
                                   " consecutive missing business days since " +
                                   format_date(missing_from));
      }
      raw.push_back({d, raw.back().price, 0.0, true, std::move(code)});
    }
  }
  // Trailing carried-forward rows extend past the last real observation; drop them.
  while (!raw.empty() && raw.back().carried) raw.pop_back();
  if (raw.empty()) {
    fail(Errc::EmptySeries, "no data for label " + label.str());
  }

  // Locate roll boundaries (row index where the underlying contract switches).
  std::vector<std::size_t> boundaries;
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (raw[i].code != raw[i - 1].code) boundaries.push_back(i);
  }

  // Per-segment additive offsets, accumulated from the latest roll backwards
  // so the adjusted old-contract close equals the adjusted new-contract price
  // on each roll day.
  std::vector<double> offset(raw.size(), 0.0);
  std::vector<RollEvent> roll_log(boundaries.size());
  double shift = 0.0;
  for (std::size_t k = boundaries.size(); k-- > 0;) {
    std::size_t i = boundaries[k];
    double raw_jump = raw[i].price - raw[i - 1].price;
    double seg_shift = (raw[i].price + shift) - raw[i - 1].price;
    roll_log[k] = {raw[i].date, raw_jump,
                   options.adjust == RollAdjust::LevelShift ? seg_shift : 0.0};
    if (options.adjust == RollAdjust::LevelShift) shift = seg_shift;
    std::size_t seg_begin = k > 0 ? boundaries[k - 1] : 0;
    if (options.adjust == RollAdjust::LevelShift) {
      for (std::size_t j = seg_begin; j < i; ++j) offset[j] = shift;
    }
  }

  std::vector<SeriesRow> rows;
  rows.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    rows.push_back({raw[i].date, raw[i].price + offset[i], raw[i].volume, raw[i].carried});
  }
  return ContinuousSeries(label, label.str(), std::move(rows), std::move(roll_log));
}

}  // namespace tzeff
