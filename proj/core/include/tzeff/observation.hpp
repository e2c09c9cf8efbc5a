#pragma once

#include <string>

#include "tzeff/dates.hpp"

namespace tzeff {

// One raw settlement record: (date, absolute contract, price, traded volume).
// Canonical contract codes: "M-2013-02", "Q-2012Q2", "Y-2016".
struct PriceObservation {
  Date date;
  std::string contract_code;
  double settle = 0.0;   // EUR/MWh, > 0
  double volume = 0.0;   // MWh, >= 0
};

}  // namespace tzeff
