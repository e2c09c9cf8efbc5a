#include "tzeff/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "tzeff/econometrics.hpp"
#include "tzeff/errors.hpp"
#include "tzeff/trading.hpp"

namespace tzeff {

namespace {

std::string fmt_fixed(double v, int decimals) {
  if (std::isnan(v)) return "na";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string err_cell(const Error& e) { return std::string("err:") + errc_name(e.code()); }

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::MissingData, "cannot write " + path.string());
  out << content;
}

// A target with its replicating portfolio, aligned, plus the volume-
// restricted subset.
struct TargetRun {
  ContractLabel label;
  ContinuousSeries portfolio;
  PricePair full;
  PricePair posvol;
};

std::string pct_cell(double v) { return fmt_fixed(v, 2); }

}  // namespace

std::string fmt_stat(double v) { return fmt_fixed(v, 3); }
std::string fmt_weight(double v) { return fmt_fixed(v, 4); }

std::string to_csv(const Table& table) {
  std::ostringstream out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out << ',';
    out << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

std::string to_markdown(const Table& table) {
  std::vector<std::size_t> width(table.header.size(), 0);
  auto grow = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  };
  grow(table.header);
  for (const auto& row : table.rows) grow(row);

  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    out << '|';
    for (std::size_t i = 0; i < width.size(); ++i) {
      std::string cell = i < row.size() ? row[i] : "";
      out << ' ' << cell << std::string(width[i] - cell.size(), ' ') << " |";
    }
    out << '\n';
  };
  emit(table.header);
  out << '|';
  for (std::size_t w : width) out << ' ' << std::string(w, '-') << " |";
  out << '\n';
  for (const auto& row : table.rows) emit(row);
  return out.str();
}

Table summary_table(const Panel& panel, std::span<const ContractLabel> targets,
                    const WeightScheme& scheme) {
  struct Column {
    std::string name;
    DescriptiveStats stats;
    bool ok;
  };
  std::vector<Column> cols;
  for (ContractLabel label : targets) {
    const ContinuousSeries* swap = panel.find(label);
    if (!swap) continue;
    Column c{label.str(), {}, false};
    try {
      c.stats = descriptive_stats(swap->prices());
      c.ok = true;
    } catch (const Error&) {
    }
    cols.push_back(c);
    Column p{"A" + label.str(), {}, false};
    try {
      ContinuousSeries port = replicate(label, panel, scheme);
      p.stats = descriptive_stats(port.prices());
      p.ok = true;
    } catch (const Error&) {
    }
    cols.push_back(p);
  }

  Table t;
  t.header.push_back("stat");
  for (const auto& c : cols) t.header.push_back(c.name);
  const char* names[] = {"mean", "median", "max", "min", "sd", "skewness", "kurtosis", "n"};
  for (int r = 0; r < 8; ++r) {
    std::vector<std::string> row{names[r]};
    for (const auto& c : cols) {
      if (!c.ok) {
        row.push_back("na");
        continue;
      }
      const DescriptiveStats& s = c.stats;
      switch (r) {
        case 0: row.push_back(fmt_stat(s.mean)); break;
        case 1: row.push_back(fmt_stat(s.median)); break;
        case 2: row.push_back(fmt_stat(s.max)); break;
        case 3: row.push_back(fmt_stat(s.min)); break;
        case 4: row.push_back(fmt_stat(s.sd)); break;
        case 5: row.push_back(fmt_stat(s.skewness)); break;
        case 6: row.push_back(fmt_stat(s.kurtosis)); break;
        case 7: row.push_back(std::to_string(s.n)); break;
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

LiquidityProfile liquidity_profile(const Panel& panel) {
  // Per date: does any contract trade?
  std::map<Date, bool> any_trade;
  for (ContractLabel label : panel.labels()) {
    for (const auto& row : panel.at(label).rows()) {
      any_trade[row.date] = any_trade[row.date] || row.volume > 0.0;
    }
  }
  if (any_trade.empty()) fail(Errc::EmptySeries, "panel has no dates");

  std::array<int, 12> days{}, active{};
  for (const auto& [date, traded] : any_trade) {
    int m = month_of(date) - 1;
    ++days[m];
    if (traded) ++active[m];
  }

  LiquidityProfile out{};
  double min_pct = std::numeric_limits<double>::infinity();
  out.min_month = 0;
  for (int m = 0; m < 12; ++m) {
    if (days[m] == 0) {
      out.pct_trading_days[m] = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    out.pct_trading_days[m] = 100.0 * active[m] / days[m];
    if (out.pct_trading_days[m] < min_pct) {
      min_pct = out.pct_trading_days[m];
      out.min_month = m + 1;
    }
  }
  if (out.min_month == 0) fail(Errc::EmptySeries, "no months with data");

  double sum = 0.0;
  int count = 0;
  for (int m = 0; m < 12; ++m) {
    double pct = out.pct_trading_days[m];
    if (std::isnan(pct)) {
      out.pct_diff_vs_min[m] = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    double diff = min_pct > 0.0 ? 100.0 * (pct - min_pct) / min_pct
                                : std::numeric_limits<double>::quiet_NaN();
    out.pct_diff_vs_min[m] = diff;
    if (!std::isnan(diff)) {
      sum += diff;
      ++count;
    }
  }
  out.avg_diff_pct = count > 0 ? sum / count : std::numeric_limits<double>::quiet_NaN();
  return out;
}

Table liquidity_table(const LiquidityProfile& profile) {
  static const char* kMonths[] = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                  "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
  Table t;
  t.header = {"month", "pct_trading_days", "pct_diff_vs_min"};
  for (int m = 0; m < 12; ++m) {
    t.rows.push_back({kMonths[m], pct_cell(profile.pct_trading_days[m]),
                      pct_cell(profile.pct_diff_vs_min[m])});
  }
  t.rows.push_back({"avg_diff", "", pct_cell(profile.avg_diff_pct)});
  return t;
}

void battery_report(const Panel& panel, const Config& config,
                    const std::filesystem::path& out_dir,
                    std::optional<std::uint64_t> scenario_seed) {
  std::vector<ContractLabel> targets;
  for (ContractLabel label : panel.labels()) {
    if (label.segment == Segment::Quarterly && label.index <= 2) targets.push_back(label);
    if (label.segment == Segment::Yearly) targets.push_back(label);
  }
  if (targets.empty()) fail(Errc::EmptySeries, "panel has no replicable targets");

  WeightScheme scheme = config.weight_scheme();
  CostModel costs = config.cost_model();
  const std::string& market = panel.market();

  std::vector<TargetRun> runs;
  for (ContractLabel label : targets) {
    const ContinuousSeries& swap = panel.at(label);
    std::optional<ContinuousSeries> portfolio;
    try {
      portfolio.emplace(replicate(label, panel, scheme));
    } catch (const Error&) {
      continue;  // portfolio never constructible: drop the target
    }
    TargetRun run{label, std::move(*portfolio), {}, {}};
    run.full = align_pair(swap, run.portfolio);
    if (run.full.size() == 0) continue;
    std::set<Date> mask;
    for (std::size_t i = 0; i < run.full.size(); ++i) {
      if (run.full.swap_volume[i] > 0.0 && run.full.portfolio_volume[i] > 0.0) {
        mask.insert(run.full.dates[i]);
      }
    }
    run.posvol = filter_pair(run.full, mask);
    runs.push_back(std::move(run));
  }
  if (runs.empty()) fail(Errc::EmptySeries, "no target has a constructible portfolio");

  std::filesystem::create_directories(out_dir);

  auto for_both = [](const TargetRun& run, auto&& fn) {
    fn("full", run.full);
    fn("posvol", run.posvol);
  };

  // adf.csv: unit-root tests on swap and portfolio prices.
  {
    Table t;
    t.header = {"target", "series", "sample", "t_stat", "p_value", "lags", "n"};
    for (const TargetRun& run : runs) {
      for_both(run, [&](const char* sample, const PricePair& pair) {
        auto row = [&](const char* which, const std::vector<double>& prices) {
          std::vector<std::string> r{run.label.str(), which, sample};
          try {
            AdfResult a = adf_test(prices);
            r.insert(r.end(), {fmt_stat(a.t_stat), fmt_stat(a.p_value),
                               std::to_string(a.lags), std::to_string(a.n)});
          } catch (const Error& e) {
            r.insert(r.end(), {err_cell(e), err_cell(e), "", ""});
          }
          t.rows.push_back(std::move(r));
        };
        row("swap", pair.swap);
        row("portfolio", pair.portfolio);
      });
    }
    write_file(out_dir / "adf.csv", to_csv(t));
  }

  // johansen.csv: trace statistics and normalized cointegration vector.
  {
    Table t;
    t.header = {"target", "sample", "trace_rank0", "crit5_rank0", "trace_rank1",
                "crit5_rank1", "n",    "beta_y",      "beta_y_se",   "constant",
                "constant_se"};
    for (const TargetRun& run : runs) {
      for_both(run, [&](const char* sample, const PricePair& pair) {
        std::vector<std::string> r{run.label.str(), sample};
        try {
          JohansenResult j = johansen_trace(pair.swap, pair.portfolio);
          r.insert(r.end(),
                   {fmt_stat(j.trace_rank0), fmt_stat(JohansenResult::kCrit5Rank0),
                    fmt_stat(j.trace_rank1), fmt_stat(JohansenResult::kCrit5Rank1),
                    std::to_string(j.n), fmt_stat(j.beta[1]), fmt_stat(j.beta_se_y),
                    fmt_stat(j.beta[2]), fmt_stat(j.beta_se_const)});
        } catch (const Error& e) {
          r.insert(r.end(), {err_cell(e), "", "", "", "", "", "", "", ""});
        }
        t.rows.push_back(std::move(r));
      });
    }
    write_file(out_dir / "johansen.csv", to_csv(t));
  }

  // convergence.csv: mean gap with Newey-West errors.
  {
    Table t;
    t.header = {"target", "sample", "alpha", "nw_se", "t_stat", "p_value", "n", "lag", "flags"};
    for (const TargetRun& run : runs) {
      for_both(run, [&](const char* sample, const PricePair& pair) {
        std::vector<std::string> r{run.label.str(), sample};
        try {
          ConvergenceResult c = convergence_test(pair.swap, pair.portfolio, config.nw_lag);
          std::string flags;
          if (c.degenerate) flags += "degenerate";
          if (c.small_sample) flags += flags.empty() ? "small_sample" : "+small_sample";
          r.insert(r.end(), {fmt_stat(c.alpha), fmt_stat(c.nw_se), fmt_stat(c.t_stat),
                             fmt_stat(c.p_value), std::to_string(c.n),
                             std::to_string(c.lag_used), flags});
        } catch (const Error& e) {
          r.insert(r.end(), {err_cell(e), "", "", "", "", "", ""});
        }
        t.rows.push_back(std::move(r));
      });
    }
    write_file(out_dir / "convergence.csv", to_csv(t));
  }

  // varratio.csv: two-sample variance comparison on log returns.
  {
    Table t;
    t.header = {"target", "sample", "sd_x", "sd_y", "p_two_sided", "p_lower", "p_upper", "f",
                "df_x", "df_y"};
    for (const TargetRun& run : runs) {
      for_both(run, [&](const char* sample, const PricePair& pair) {
        std::vector<std::string> r{run.label.str(), sample};
        try {
          std::vector<double> rx = log_returns(pair.swap);
          std::vector<double> ry = log_returns(pair.portfolio);
          VarianceRatioResult v = variance_ratio_test(rx, ry);
          r.insert(r.end(), {fmt_stat(v.sd_x), fmt_stat(v.sd_y), fmt_stat(v.p_two_sided),
                             fmt_stat(v.p_lower), fmt_stat(v.p_upper), fmt_stat(v.f),
                             std::to_string(v.df_x), std::to_string(v.df_y)});
        } catch (const Error& e) {
          r.insert(r.end(), {err_cell(e), "", "", "", "", "", "", ""});
        }
        t.rows.push_back(std::move(r));
      });
    }
    write_file(out_dir / "varratio.csv", to_csv(t));
  }

  // pd_ledger.csv: price-difference rule with and without costs.
  {
    Table t;
    t.header = {"target", "sample", "costs", "n", "mean", "sd", "t_stat", "cum_pnl"};
    for (const TargetRun& run : runs) {
      for_both(run, [&](const char* sample, const PricePair& pair) {
        for (bool with_costs : {false, true}) {
          std::vector<std::string> r{run.label.str(), sample, with_costs ? "yes" : "no"};
          try {
            TradeLedger led = pd_rule(pair, run.label, market, with_costs ? &costs : nullptr);
            r.insert(r.end(), {std::to_string(led.n), fmt_stat(led.mean), fmt_stat(led.sd),
                               fmt_stat(led.t_stat), fmt_stat(led.cumulative)});
          } catch (const Error& e) {
            r.insert(r.end(), {err_cell(e), "", "", "", ""});
          }
          t.rows.push_back(std::move(r));
        }
      });
    }
    write_file(out_dir / "pd_ledger.csv", to_csv(t));
  }

  // av_violations.csv: no-arbitrage violation frequencies.
  {
    Table t;
    t.header = {"target", "sample", "pct_no_cost", "pct_sell_repl", "pct_buy_repl", "n"};
    for (const TargetRun& run : runs) {
      for_both(run, [&](const char* sample, const PricePair& pair) {
        std::vector<std::string> r{run.label.str(), sample};
        try {
          ViolationReport v = av_rule(pair, run.label, market, costs);
          r.insert(r.end(), {pct_cell(v.pct_no_cost), pct_cell(v.pct_sell_repl_with_cost),
                             pct_cell(v.pct_buy_repl_with_cost), std::to_string(v.n)});
        } catch (const Error& e) {
          r.insert(r.end(), {err_cell(e), "", "", ""});
        }
        t.rows.push_back(std::move(r));
      });
    }
    write_file(out_dir / "av_violations.csv", to_csv(t));
  }

  // summary.md: provenance plus the descriptive and liquidity tables.
  {
    std::ostringstream md;
    md << "# Market battery report\n\n";
    md << "- market: " << market << '\n';
    char hex[32];
    std::snprintf(hex, sizeof(hex), "%016llx", (unsigned long long)config.hash());
    md << "- config_hash: " << hex << '\n';
    if (scenario_seed) {
      md << "- scenario_seed: " << *scenario_seed << '\n';
    }
    md << "- targets: ";
    for (std::size_t i = 0; i < runs.size(); ++i) {
      if (i) md << ", ";
      md << runs[i].label.str();
    }
    md << "\n\n## Price summary\n\n";
    md << to_markdown(summary_table(panel, targets, scheme));
    md << "\n## Liquidity profile\n\n";
    try {
      md << to_markdown(liquidity_table(liquidity_profile(panel)));
    } catch (const Error& e) {
      md << err_cell(e) << '\n';
    }
    write_file(out_dir / "summary.md", md.str());
  }
}

}  // namespace tzeff
