#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tzeff/config.hpp"
#include "tzeff/panel.hpp"
#include "tzeff/replication.hpp"

namespace tzeff {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& table);
std::string to_markdown(const Table& table);

// Fixed-width numeric formatting used across all report output: 3 decimals
// for prices and statistics, 4 for weights; NaN prints as "na".
std::string fmt_stat(double v);
std::string fmt_weight(double v);

// Descriptive statistics, one column per target contract followed by its
// replicating portfolio, rows mean/median/max/min/sd/skewness/kurtosis/N.
Table summary_table(const Panel& panel, std::span<const ContractLabel> targets,
                    const WeightScheme& scheme);

struct LiquidityProfile {
  std::array<double, 12> pct_trading_days;  // % of days with any trade, by month
  std::array<double, 12> pct_diff_vs_min;   // relative difference vs the min month, %
  double avg_diff_pct;
  int min_month;  // 1..12
};

// Monthly concentration of trading activity: a trading day is one with
// positive volume in at least one contract.
LiquidityProfile liquidity_profile(const Panel& panel);
Table liquidity_table(const LiquidityProfile& profile);

// Full battery over every replicable target in the panel. Writes adf.csv,
// johansen.csv, convergence.csv, varratio.csv, pd_ledger.csv,
// av_violations.csv and summary.md into out_dir. Per-target failures are
// recorded as err:<code> cells rather than aborting the run; output is
// byte-stable for fixed inputs and config.
void battery_report(const Panel& panel, const Config& config,
                    const std::filesystem::path& out_dir,
                    std::optional<std::uint64_t> scenario_seed = std::nullopt);

}  // namespace tzeff
