#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tzeff/contracts.hpp"
#include "tzeff/dates.hpp"
#include "tzeff/observation.hpp"

namespace tzeff {

struct DeliveryPeriod {
  Date start;
  Date end;
};

// Delivery window of `label` as quoted on trading day t: the index-th
// month/quarter/year after t's own month/quarter/year.
DeliveryPeriod delivery_period(ContractLabel label, Date t);

// First business day of the delivery period of the front contract in
// label's segment; the continuous series links to the next contract from
// this day onward.
Date roll_date(ContractLabel label, Date t, const BusinessCalendar& cal);

// True on days the label is quoted at all (quarterly labels trade only in
// their designated quarter).
bool label_trades_on(ContractLabel label, Date t);

// Absolute-contract key in canonical code form ("M-2013-02", ...).
std::string underlying_contract_code(ContractLabel label, Date t);

// Splits a canonical code into (segment, delivery-period first day).
// Returns nullopt for non-canonical codes.
struct ContractKey {
  Segment segment;
  Date delivery_start;
};
std::optional<ContractKey> parse_contract_code(std::string_view code);

struct SeriesRow {
  Date date;
  double price = 0.0;
  double volume = 0.0;
  bool carried_forward = false;  // filled from previous close, no trade
};

struct RollEvent {
  Date date;          // first day priced off the next contract
  double raw_jump;    // next-contract price minus last old-contract price
  double adjustment;  // additive shift applied to all prior history
};

enum class RollAdjust { None, LevelShift };

// Roll-linked daily price/volume series for one label. Immutable once built.
class ContinuousSeries {
public:
  ContinuousSeries(ContractLabel label, std::string name, std::vector<SeriesRow> rows,
                   std::vector<RollEvent> roll_log);

  const ContractLabel& label() const { return label_; }
  const std::string& name() const { return name_; }
  const std::vector<SeriesRow>& rows() const { return rows_; }
  const std::vector<RollEvent>& roll_log() const { return roll_log_; }

  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  std::vector<Date> dates() const;
  std::vector<double> prices() const;
  std::vector<double> volumes() const;

  const SeriesRow* find(Date d) const;  // nullptr when the date is absent

private:
  ContractLabel label_;
  std::string name_;
  std::vector<SeriesRow> rows_;
  std::vector<RollEvent> roll_log_;
};

struct SeriesBuildOptions {
  RollAdjust adjust = RollAdjust::LevelShift;
  int gap_limit = 10;  // max consecutive missing business days tolerated
  BusinessCalendar calendar;
};

// Links per-contract observations into the label's continuous series.
// Missing single days are carried forward (volume 0) and flagged; a run of
// more than gap_limit missing business days is an error. With LevelShift,
// history before each roll is shifted additively so the series shows no
// roll jump; with None the raw splice is kept. Either way the jump is
// recorded in the roll log.
ContinuousSeries build_continuous_series(std::span<const PriceObservation> observations,
                                         ContractLabel label,
                                         const SeriesBuildOptions& options = {});

}  // namespace tzeff
