#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "tzeff/contracts.hpp"
#include "tzeff/panel.hpp"

namespace tzeff {

// Per-transaction fee plus relative bid-ask spreads by (market, segment).
// Spread is quoted as (ask-bid)/midpoint; settlement prices are treated as
// midpoints, so each side normally pays half the spread. The
// full_spread_on_side switch charges the whole spread on each side instead.
struct CostModel {
  double trade_fee = 0.01;  // EUR/MWh per transaction
  std::map<std::string, std::array<double, 3>> spread_pct;  // market -> {M, Q, Y}
  bool full_spread_on_side = false;

  double spread(const std::string& market, Segment segment) const;
  double side_fraction() const { return full_spread_on_side ? 1.0 : 0.5; }

  // Fee and spread table used throughout: DE 0.8/0.6/0.3%, FR 2.7/1.9/1.4%,
  // ES 3.2/2.6/1.9%, fee 0.01 EUR/MWh.
  static CostModel defaults();
};

double effective_buy_price(double mid, Segment segment, const std::string& market,
                           const CostModel& costs);
double effective_sell_price(double mid, Segment segment, const std::string& market,
                            const CostModel& costs);

// Per-leg variant for portfolios: weighted legs each cross their own spread,
// one fee for the basket.
struct LegQuote {
  double mid;
  double weight;
  Segment segment;
};
double effective_buy_price(std::span<const LegQuote> legs, const std::string& market,
                           const CostModel& costs);
double effective_sell_price(std::span<const LegQuote> legs, const std::string& market,
                            const CostModel& costs);

// Replicating-portfolio legs are one segment down from the target.
Segment leg_segment_for(Segment target);

enum class TradeDirection { BuySwap, SellSwap };

struct LedgerRow {
  Date date;
  TradeDirection direction;
  double gross;  // EUR/MWh captured at mid prices
  double net;    // after fees and spreads
};

struct TradeLedger {
  std::vector<LedgerRow> rows;
  int n = 0;  // days traded
  double mean = 0.0;
  double sd = 0.0;
  double t_stat = 0.0;
  double cumulative = 0.0;
  bool degenerate = false;  // zero-variance p/l, t-stat undefined
};

struct ProfitTTest {
  double t_stat;
  double p_value;
  bool degenerate;
};

// One-sample t-test that mean daily profit is zero.
ProfitTTest profit_ttest(std::span<const double> daily_pnl);

// Price-difference rule: each day buys whichever of (swap, portfolio) was
// cheaper the previous day and sells the dearer, capturing that day's gap.
// Equal previous-day prices (within tolerance) mean no trade. Pass costs as
// nullptr for the frictionless ledger; the ledger statistics are computed
// on net p/l, which equals gross when costs are absent.
TradeLedger pd_rule(const PricePair& pair, ContractLabel target, const std::string& market,
                    const CostModel* costs);

struct ViolationReport {
  double pct_no_cost = 0.0;             // % days with any price gap
  double pct_sell_repl_with_cost = 0.0; // % days: buy swap, sell portfolio profitable
  double pct_buy_repl_with_cost = 0.0;  // % days: sell swap, buy portfolio profitable
  int n = 0;
};

// Arbitrage-violation frequencies with and without transaction costs.
ViolationReport av_rule(const PricePair& pair, ContractLabel target, const std::string& market,
                        const CostModel& costs);

// Price gaps below this are treated as equality (floating-point guard).
inline constexpr double kGapTolerance = 1e-9;

}  // namespace tzeff
