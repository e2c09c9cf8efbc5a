#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tzeff/contracts.hpp"
#include "tzeff/observation.hpp"

namespace tzeff {

// CSV schema: header "date,contract_code,settle,volume", ISO dates, '.'
// decimal separator. An empty volume field means "no trade" and is
// flagged in `warnings`. Malformed rows, duplicate (date, contract) keys
// and non-positive settlement prices throw with the offending line number.
std::vector<PriceObservation> parse_price_file(std::istream& in,
                                               std::vector<std::string>* warnings = nullptr);

// File-level wrapper; inflates the stream first when the name ends ".gz".
std::vector<PriceObservation> read_price_file(const std::filesystem::path& path,
                                              std::vector<std::string>* warnings = nullptr);

// Inverse of parse_price_file; prices/volumes round-trip exactly.
void write_price_file(std::ostream& out, std::span<const PriceObservation> observations);
void write_price_file(const std::filesystem::path& path,
                      std::span<const PriceObservation> observations);

// Rewrites exchange-specific contract codes ("F1BM-2013-02") into canonical
// ones using a prefix table such as {"F1BM" -> Monthly}. Canonical codes pass
// through untouched; unknown codes throw.
std::vector<PriceObservation> normalize_contract_codes(
    std::vector<PriceObservation> observations, const std::map<std::string, Segment>& prefixes);

}  // namespace tzeff
