#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tzeff/series.hpp"

namespace tzeff {

// Immutable bundle of continuous series for one market.
class Panel {
public:
  Panel(std::string market, std::vector<ContinuousSeries> series);

  // Builds continuous series for every label with data: M1..M6, all
  // quarterly labels, Y1. Labels without observations are skipped.
  static Panel build(std::string market, std::span<const PriceObservation> observations,
                     const SeriesBuildOptions& options = {});

  const std::string& market() const { return market_; }
  std::vector<ContractLabel> labels() const;

  const ContinuousSeries* find(ContractLabel label) const;
  const ContinuousSeries& at(ContractLabel label) const;  // throws MissingData

  void add(ContinuousSeries series);  // e.g. a replicating portfolio series

private:
  std::string market_;
  std::map<std::string, ContinuousSeries> series_;
};

// Two series restricted to their common dates.
struct PricePair {
  std::vector<Date> dates;
  std::vector<double> swap;
  std::vector<double> portfolio;
  std::vector<double> swap_volume;
  std::vector<double> portfolio_volume;

  std::size_t size() const { return dates.size(); }
};

PricePair align_pair(const ContinuousSeries& swap, const ContinuousSeries& portfolio);

// Dates (within an aligned pair/panel) on which the target and every
// component traded. Requires identical date axes; misalignment is an error.
std::set<Date> positive_volume_mask(const ContinuousSeries& target,
                                    std::span<const ContinuousSeries* const> components);

// Pair filtered to a date mask (used for positive-volume restricted runs).
PricePair filter_pair(const PricePair& pair, const std::set<Date>& keep);

// Series restricted to the given dates.
ContinuousSeries restrict_series(const ContinuousSeries& s, const std::set<Date>& keep);

}  // namespace tzeff
