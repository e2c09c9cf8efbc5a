#include "tzeff/trading.hpp"

#include <cmath>
#include <limits>

#include "dist.hpp"
#include "tzeff/errors.hpp"

namespace tzeff {

double CostModel::spread(const std::string& market, Segment segment) const {
  auto it = spread_pct.find(market);
  if (it == spread_pct.end()) {
    fail(Errc::BadConfig, "no spread table for market '" + market + "'");
  }
  double s = it->second[std::size_t(segment)];
  if (s < 0.0 || s >= 1.0) fail(Errc::BadConfig, "spread out of range for " + market);
  return s;
}

CostModel CostModel::defaults() {
  CostModel m;
  m.trade_fee = 0.01;
  m.spread_pct["DE"] = {0.008, 0.006, 0.003};
  m.spread_pct["FR"] = {0.027, 0.019, 0.014};
  m.spread_pct["ES"] = {0.032, 0.026, 0.019};
  return m;
}

double effective_buy_price(double mid, Segment segment, const std::string& market,
                           const CostModel& costs) {
  double half = costs.side_fraction() * costs.spread(market, segment);
  return mid * (1.0 + half) + costs.trade_fee;
}

double effective_sell_price(double mid, Segment segment, const std::string& market,
                            const CostModel& costs) {
  double half = costs.side_fraction() * costs.spread(market, segment);
  return mid * (1.0 - half) - costs.trade_fee;
}

double effective_buy_price(std::span<const LegQuote> legs, const std::string& market,
                           const CostModel& costs) {
  double total = 0.0;
  for (const LegQuote& leg : legs) {
    double half = costs.side_fraction() * costs.spread(market, leg.segment);
    total += leg.weight * leg.mid * (1.0 + half);
  }
  return total + costs.trade_fee;
}

double effective_sell_price(std::span<const LegQuote> legs, const std::string& market,
                            const CostModel& costs) {
  double total = 0.0;
  for (const LegQuote& leg : legs) {
    double half = costs.side_fraction() * costs.spread(market, leg.segment);
    total += leg.weight * leg.mid * (1.0 - half);
  }
  return total - costs.trade_fee;
}

Segment leg_segment_for(Segment target) {
  switch (target) {
    case Segment::Yearly: return Segment::Quarterly;
    case Segment::Quarterly: return Segment::Monthly;
    case Segment::Monthly: break;
  }
  fail(Errc::NotReplicable, "monthly contracts have no replicating legs");
}

ProfitTTest profit_ttest(std::span<const double> daily_pnl) {
  const int n = int(daily_pnl.size());
  if (n < 3) fail(Errc::TooShort, "t-test needs at least 3 observations");
  double mean = 0.0;
  for (double v : daily_pnl) mean += v;
  mean /= double(n);
  double ssq = 0.0;
  for (double v : daily_pnl) ssq += (v - mean) * (v - mean);
  double sd = std::sqrt(ssq / double(n - 1));
  if (sd <= 0.0) {
    return {std::numeric_limits<double>::quiet_NaN(),
            std::numeric_limits<double>::quiet_NaN(), true};
  }
  double t = mean / (sd / std::sqrt(double(n)));
  return {t, dist::student_t_two_sided_p(t, n - 1), false};
}

namespace {

void check_pair(const PricePair& pair) {
  std::size_t n = pair.dates.size();
  if (pair.swap.size() != n || pair.portfolio.size() != n) {
    fail(Errc::Misaligned, "pair arrays have different lengths");
  }
}

// Round-trip friction for one day: half-spread on each side plus two fees.
double round_trip_cost(double swap_mid, double portfolio_mid, Segment swap_seg, Segment leg_seg,
                       const std::string& market, const CostModel& costs) {
  double f = costs.side_fraction();
  return f * costs.spread(market, swap_seg) * swap_mid +
         f * costs.spread(market, leg_seg) * portfolio_mid + 2.0 * costs.trade_fee;
}

}  // namespace

TradeLedger pd_rule(const PricePair& pair, ContractLabel target, const std::string& market,
                    const CostModel* costs) {
  check_pair(pair);
  if (pair.size() < 3) fail(Errc::TooShort, "pd rule needs at least 3 aligned days");

  Segment swap_seg = target.segment;
  Segment leg_seg = leg_segment_for(target.segment);

  TradeLedger ledger;
  for (std::size_t t = 1; t < pair.size(); ++t) {
    double prev_gap = pair.swap[t - 1] - pair.portfolio[t - 1];
    if (std::abs(prev_gap) <= kGapTolerance) continue;  // tie yesterday, no trade

    LedgerRow row;
    row.date = pair.dates[t];
    if (prev_gap < 0.0) {
      // Swap was cheaper: buy swap, sell portfolio, capture today's gap.
      row.direction = TradeDirection::BuySwap;
      row.gross = pair.portfolio[t] - pair.swap[t];
    } else {
      row.direction = TradeDirection::SellSwap;
      row.gross = pair.swap[t] - pair.portfolio[t];
    }
    row.net = row.gross;
    if (costs) {
      row.net -= round_trip_cost(pair.swap[t], pair.portfolio[t], swap_seg, leg_seg, market,
                                 *costs);
    }
    ledger.rows.push_back(row);
  }

  ledger.n = int(ledger.rows.size());
  if (ledger.n == 0) return ledger;
  for (const LedgerRow& r : ledger.rows) {
    ledger.mean += r.net;
    ledger.cumulative += r.net;
  }
  ledger.mean /= double(ledger.n);
  double ssq = 0.0;
  for (const LedgerRow& r : ledger.rows) ssq += (r.net - ledger.mean) * (r.net - ledger.mean);
  ledger.sd = ledger.n > 1 ? std::sqrt(ssq / double(ledger.n - 1)) : 0.0;
  if (ledger.sd > 0.0) {
    ledger.t_stat = ledger.mean / (ledger.sd / std::sqrt(double(ledger.n)));
  } else {
    ledger.t_stat = std::numeric_limits<double>::quiet_NaN();
    ledger.degenerate = true;
  }
  return ledger;
}

ViolationReport av_rule(const PricePair& pair, ContractLabel target, const std::string& market,
                        const CostModel& costs) {
  check_pair(pair);
  if (pair.size() == 0) fail(Errc::TooShort, "av rule needs at least 1 aligned day");

  Segment swap_seg = target.segment;
  Segment leg_seg = leg_segment_for(target.segment);

  int gap_days = 0, sell_repl = 0, buy_repl = 0;
  for (std::size_t t = 0; t < pair.size(); ++t) {
    double s = pair.swap[t], p = pair.portfolio[t];
    if (std::abs(s - p) > kGapTolerance) ++gap_days;

    // Buy the swap, sell the replicating portfolio.
    double profit_sell_repl = effective_sell_price(p, leg_seg, market, costs) -
                              effective_buy_price(s, swap_seg, market, costs);
    if (profit_sell_repl > kGapTolerance) ++sell_repl;

    // Buy the replicating portfolio, sell the swap.
    double profit_buy_repl = effective_sell_price(s, swap_seg, market, costs) -
                             effective_buy_price(p, leg_seg, market, costs);
    if (profit_buy_repl > kGapTolerance) ++buy_repl;
  }

  ViolationReport out;
  out.n = int(pair.size());
  out.pct_no_cost = 100.0 * gap_days / out.n;
  out.pct_sell_repl_with_cost = 100.0 * sell_repl / out.n;
  out.pct_buy_repl_with_cost = 100.0 * buy_repl / out.n;
  return out;
}

}  // namespace tzeff
