#pragma once

#include <array>
#include <span>
#include <vector>

#include "tzeff/panel.hpp"

namespace tzeff {

enum class WeightMode { Exact, EqualApprox };

struct WeightScheme {
  WeightMode mode = WeightMode::EqualApprox;
  double annual_rate = 0.022543;  // used by Exact only
};

// Present-value discount factor for a cash flow j months out: (1+r)^(-j/12).
double discount_weight(double months_to_delivery, double annual_rate);

// Normalized leg weights over the months-to-delivery index set. Exact mode
// normalizes discount factors to sum 1; EqualApprox returns 1/|J| each.
std::vector<double> weight_function(std::span<const int> index_set, double annual_rate,
                                    WeightMode mode);

struct PortfolioLeg {
  ContractLabel label;
  double weight;
  int months_to_delivery;
};

struct PortfolioComposition {
  ContractLabel target;
  int month;  // calendar month (1..12) the composition applies to
  std::vector<PortfolioLeg> legs;
};

// Monthly legs replicating Q(b,c) during calendar month `month`. The three
// legs cover the delivered quarter month by month; combinations whose legs
// would fall outside M1..M6 are not replicable and throw.
std::array<ContractLabel, 3> quarterly_composition(int b, int c, int month);

// Quarterly legs replicating Y1 while trading in quarter c.
std::array<ContractLabel, 4> yearly_composition(int f, int c);

// Composition with resolved weights for a target label in a given month.
PortfolioComposition composition_for(ContractLabel target, int month,
                                     const WeightScheme& scheme = {});

// Weighted leg-price series for the target's replicating portfolio. Dates
// with any missing leg are omitted; the portfolio volume is the minimum leg
// volume, so the positive-volume filter applies unchanged.
ContinuousSeries replicate(ContractLabel target, const Panel& panel,
                           const WeightScheme& scheme = {});

}  // namespace tzeff
