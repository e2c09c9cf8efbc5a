#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "tzeff/dates.hpp"
#include "tzeff/observation.hpp"

namespace tzeff {

enum class VolumePatternKind { AlwaysOn, MonthlyDrought, Bernoulli };

struct VolumePattern {
  VolumePatternKind kind = VolumePatternKind::AlwaysOn;
  std::set<int> dry_months;   // MonthlyDrought: calendar months with no trading
  double p = 1.0;             // Bernoulli: per-(day, contract) trade probability

  static VolumePattern always_on() { return {}; }
  static VolumePattern monthly_drought(std::set<int> months) {
    return {VolumePatternKind::MonthlyDrought, std::move(months), 1.0};
  }
  static VolumePattern bernoulli(double p) { return {VolumePatternKind::Bernoulli, {}, p}; }
};

// Fully deterministic market recipe: the same spec always yields the same
// observations, byte for byte (xoshiro256++ streams keyed off `seed`).
//
// Monthly prices ride a common geometric random walk plus per-contract
// stationary noise; each quarterly price is the exact average of the three
// monthly prices covering its delivery quarter, plus `bias_alpha` plus its
// own noise; yearly likewise over its four quarters. With bias_alpha = 0 and
// noise_vol = 0 the market is exactly arbitrage-free.
struct ScenarioSpec {
  std::uint64_t seed = 1;
  int n_days = 500;
  double base_price = 50.0;  // EUR/MWh
  double rw_vol = 0.01;      // daily log-volatility of the driving walk
  double bias_alpha = 0.0;   // systematic swap-minus-portfolio gap, EUR/MWh
  double noise_vol = 0.0;    // sd of per-contract stationary noise, EUR/MWh
  VolumePattern volume;
  Date start = make_date(2010, 1, 4);
  std::string market = "SYN";
  bool emit_monthly = true;
  bool emit_quarterly = true;
  bool emit_yearly = true;

  static ScenarioSpec load(const std::filesystem::path& file);
};

// Synthetic observations in the ingestion schema, sorted by (date, code).
std::vector<PriceObservation> gen_market(const ScenarioSpec& spec);

enum class PairMode { CointegratedGap, IndependentWalks, StationaryBoth };

struct PairSpec {
  PairMode mode = PairMode::CointegratedGap;
  double alpha = 0.0;     // CointegratedGap: y = x + alpha + AR noise
  double noise_sd = 0.02; // innovation sd of the AR(phi) gap noise
  double phi = 0.5;
  double rw_vol = 0.5;    // innovation sd of the driving walk(s)
  double base = 50.0;
};

struct SeriesPair {
  std::vector<double> x;
  std::vector<double> y;
};

// Ground-truth pairs for the unit-root/cointegration test oracles.
SeriesPair gen_unit_root_pair(std::uint64_t seed, int n, const PairSpec& spec);

}  // namespace tzeff
