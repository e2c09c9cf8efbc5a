#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tzeff/contracts.hpp"
#include "tzeff/dates.hpp"
#include "tzeff/replication.hpp"
#include "tzeff/series.hpp"
#include "tzeff/trading.hpp"

namespace tzeff {

// Flat "key = value" file: one pair per line, '#' comments, optional double
// quotes around values, dotted keys allowed (spread.DE.M = 0.008).
std::map<std::string, std::string> read_kv_file(const std::filesystem::path& file);
std::map<std::string, std::string> parse_kv_text(const std::string& text,
                                                 const std::string& origin);

// Run configuration shared by the CLI and the report battery.
struct Config {
  std::string market = "DE";
  double rate = 0.022543;  // annual discount rate for exact weights
  WeightMode weight_mode = WeightMode::EqualApprox;
  std::optional<int> nw_lag;  // empty = plug-in rule
  RollAdjust adjust = RollAdjust::LevelShift;
  int gap_limit = 10;
  double fee = 0.01;
  std::map<std::string, std::array<double, 3>> spreads;  // market -> {M,Q,Y}
  bool full_spread_on_side = false;
  bool volume_filter = false;
  std::vector<Date> holidays;
  std::map<std::string, Segment> code_prefixes;  // exchange code normalization
  std::string cache_dir = ".tzeff";

  static Config defaults();
  static Config load(const std::filesystem::path& file);  // defaults + overrides

  CostModel cost_model() const;
  BusinessCalendar calendar() const;
  SeriesBuildOptions series_options() const;
  WeightScheme weight_scheme() const;

  // Stable canonical serialization; hash() feeds report provenance metadata.
  std::string canonical() const;
  std::uint64_t hash() const;
};

}  // namespace tzeff
