#include "tzeff/replication.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "tzeff/errors.hpp"

namespace tzeff {

double discount_weight(double months_to_delivery, double annual_rate) {
  if (months_to_delivery < 0.0) fail(Errc::NotReplicable, "negative months to delivery");
  if (annual_rate <= -1.0) fail(Errc::NotReplicable, "rate must exceed -100%");
  return std::pow(1.0 + annual_rate, -months_to_delivery / 12.0);
}

std::vector<double> weight_function(std::span<const int> index_set, double annual_rate,
                                    WeightMode mode) {
  if (index_set.empty()) fail(Errc::NotReplicable, "empty index set");
  std::vector<double> w(index_set.size());
  if (mode == WeightMode::EqualApprox) {
    std::fill(w.begin(), w.end(), 1.0 / double(index_set.size()));
    return w;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < index_set.size(); ++i) {
    w[i] = discount_weight(index_set[i], annual_rate);
    sum += w[i];
  }
  for (double& x : w) x /= sum;
  return w;
}

std::array<ContractLabel, 3> quarterly_composition(int b, int c, int month) {
  if (b < 1 || b > kMaxQuarterlyIndex || c < 1 || c > 4) {
    fail(Errc::InvalidLabel, "bad quarterly label Q" + std::to_string(b) + std::to_string(c));
  }
  if (month < 1 || month > 12) fail(Errc::InvalidLabel, "bad month " + std::to_string(month));
  if ((month - 1) / 3 + 1 != c) {
    fail(Errc::NotReplicable, "Q" + std::to_string(b) + std::to_string(c) +
                                  " does not trade in month " + std::to_string(month));
  }
  // K branches on the month's position within its quarter.
  int k = 0;
  switch ((month - 1) % 3) {
    case 0: k = 4 * b + 2; break;  // first month of the quarter
    case 1: k = 4 * b; break;
    case 2: k = 4 * b - 2; break;
  }
  int first = month - 3 * c - b + k;
  if (first < 1 || first + 2 > kMaxMonthlyIndex) {
    fail(Errc::NotReplicable, "Q" + std::to_string(b) + std::to_string(c) +
                                  " not replicable in month " + std::to_string(month) +
                                  " (needs M" + std::to_string(first) + "..M" +
                                  std::to_string(first + 2) + ")");
  }
  return {ContractLabel::monthly(first), ContractLabel::monthly(first + 1),
          ContractLabel::monthly(first + 2)};
}

std::array<ContractLabel, 4> yearly_composition(int f, int c) {
  if (f != 1) fail(Errc::NotReplicable, "only Y1 replication is supported");
  if (c < 1 || c > 4) fail(Errc::InvalidLabel, "bad trade quarter " + std::to_string(c));
  // Quarters-ahead offsets per trade quarter: later in the year, nearer legs.
  int first_b = 5 - c;
  return {ContractLabel::quarterly(first_b, c), ContractLabel::quarterly(first_b + 1, c),
          ContractLabel::quarterly(first_b + 2, c), ContractLabel::quarterly(first_b + 3, c)};
}

PortfolioComposition composition_for(ContractLabel target, int month,
                                     const WeightScheme& scheme) {
  PortfolioComposition out;
  out.target = target;
  out.month = month;

  std::vector<ContractLabel> legs;
  if (target.segment == Segment::Quarterly) {
    auto l = quarterly_composition(target.index, target.trade_quarter, month);
    legs.assign(l.begin(), l.end());
  } else if (target.segment == Segment::Yearly) {
    int c = (month - 1) / 3 + 1;
    auto l = yearly_composition(target.index, c);
    legs.assign(l.begin(), l.end());
  } else {
    fail(Errc::NotReplicable, "no replicating portfolio for monthly label " + target.str());
  }

  std::vector<int> months_out;
  months_out.reserve(legs.size());
  for (const ContractLabel& leg : legs) {
    if (leg.segment == Segment::Monthly) {
      months_out.push_back(leg.index);
    } else {
      // Quarterly leg: months from the trade month to the delivered quarter.
      int pos = (month - 1) % 3 + 1;
      months_out.push_back(3 * leg.index - pos + 1);
    }
  }
  std::vector<double> weights = weight_function(months_out, scheme.annual_rate, scheme.mode);

  out.legs.reserve(legs.size());
  for (std::size_t i = 0; i < legs.size(); ++i) {
    out.legs.push_back({legs[i], weights[i], months_out[i]});
  }
  return out;
}

ContinuousSeries replicate(ContractLabel target, const Panel& panel,
                           const WeightScheme& scheme) {
  if (target.segment == Segment::Monthly) {
    fail(Errc::NotReplicable, "no replicating portfolio for monthly label " + target.str());
  }

  // Candidate dates: union of leg dates across the twelve monthly
  // compositions, restricted to days the target itself is quoted.
  std::set<Date> candidates;
  for (int j = 1; j <= kMaxMonthlyIndex; ++j) {
    if (const ContinuousSeries* s = panel.find(ContractLabel::monthly(j))) {
      for (const auto& r : s->rows()) candidates.insert(r.date);
    }
  }
  for (int b = 1; b <= kMaxQuarterlyIndex; ++b) {
    for (int c = 1; c <= 4; ++c) {
      if (const ContinuousSeries* s = panel.find(ContractLabel::quarterly(b, c))) {
        for (const auto& r : s->rows()) candidates.insert(r.date);
      }
    }
  }

  std::vector<SeriesRow> rows;
  int cached_month = -1;
  bool feasible = false;
  PortfolioComposition comp;
  for (Date d : candidates) {
    if (!label_trades_on(target, d)) continue;
    int m = month_of(d);
    if (m != cached_month) {
      cached_month = m;
      try {
        comp = composition_for(target, m, scheme);
        feasible = true;
      } catch (const Error& e) {
        if (e.code() != Errc::NotReplicable) throw;
        feasible = false;
      }
    }
    if (!feasible) continue;

    double price = 0.0;
    double volume = std::numeric_limits<double>::infinity();
    bool complete = true;
    for (const PortfolioLeg& leg : comp.legs) {
      const ContinuousSeries* s = panel.find(leg.label);
      const SeriesRow* row = s ? s->find(d) : nullptr;
      if (!row) {
        complete = false;
        break;
      }
      price += leg.weight * row->price;
      volume = std::min(volume, row->volume);
    }
    if (complete) rows.push_back({d, price, volume, false});
  }

  if (rows.empty()) {
    fail(Errc::EmptySeries, "no date with a full composition for " + target.str());
  }
  return ContinuousSeries(target, "A" + target.str(), std::move(rows), {});
}

}  // namespace tzeff
