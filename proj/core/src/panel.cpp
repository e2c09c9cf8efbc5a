#include "tzeff/panel.hpp"

#include <algorithm>

#include "tzeff/errors.hpp"

namespace tzeff {

Panel::Panel(std::string market, std::vector<ContinuousSeries> series)
    : market_(std::move(market)) {
  for (auto& s : series) {
    std::string key = s.name();
    series_.insert_or_assign(std::move(key), std::move(s));
  }
}

Panel Panel::build(std::string market, std::span<const PriceObservation> observations,
                   const SeriesBuildOptions& options) {
  std::vector<ContractLabel> wanted;
  for (int j = 1; j <= kMaxMonthlyIndex; ++j) wanted.push_back(ContractLabel::monthly(j));
  for (int b = 1; b <= kMaxQuarterlyIndex; ++b) {
    for (int c = 1; c <= 4; ++c) wanted.push_back(ContractLabel::quarterly(b, c));
  }
  wanted.push_back(ContractLabel::yearly());

  std::vector<ContinuousSeries> built;
  for (ContractLabel label : wanted) {
    try {
      built.push_back(build_continuous_series(observations, label, options));
    } catch (const Error& e) {
      if (e.code() == Errc::EmptySeries) continue;  // label has no data in this market
      throw;
    }
  }
  return Panel(std::move(market), std::move(built));
}

std::vector<ContractLabel> Panel::labels() const {
  std::vector<ContractLabel> out;
  out.reserve(series_.size());
  for (const auto& [_, s] : series_) out.push_back(s.label());
  std::sort(out.begin(), out.end());
  return out;
}

const ContinuousSeries* Panel::find(ContractLabel label) const {
  auto it = series_.find(label.str());
  return it == series_.end() ? nullptr : &it->second;
}

const ContinuousSeries& Panel::at(ContractLabel label) const {
  const ContinuousSeries* s = find(label);
  if (!s) fail(Errc::MissingData, "no series for label " + label.str() + " in " + market_);
  return *s;
}

void Panel::add(ContinuousSeries series) {
  std::string key = series.name();
  series_.insert_or_assign(std::move(key), std::move(series));
}

PricePair align_pair(const ContinuousSeries& swap, const ContinuousSeries& portfolio) {
  PricePair out;
  auto a = swap.rows().begin(), ae = swap.rows().end();
  auto b = portfolio.rows().begin(), be = portfolio.rows().end();
  while (a != ae && b != be) {
    if (a->date < b->date) {
      ++a;
    } else if (b->date < a->date) {
      ++b;
    } else {
      out.dates.push_back(a->date);
      out.swap.push_back(a->price);
      out.portfolio.push_back(b->price);
      out.swap_volume.push_back(a->volume);
      out.portfolio_volume.push_back(b->volume);
      ++a;
      ++b;
    }
  }
  return out;
}

std::set<Date> positive_volume_mask(const ContinuousSeries& target,
                                    std::span<const ContinuousSeries* const> components) {
  for (const ContinuousSeries* c : components) {
    if (c->size() != target.size()) {
      fail(Errc::Misaligned, "component " + c->name() + " not aligned with " + target.name());
    }
    for (std::size_t i = 0; i < target.size(); ++i) {
      if (c->rows()[i].date != target.rows()[i].date) {
        fail(Errc::Misaligned, "component " + c->name() + " not aligned with " + target.name());
      }
    }
  }
  std::set<Date> out;
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (target.rows()[i].volume <= 0.0) continue;
    bool all_traded = true;
    for (const ContinuousSeries* c : components) {
      if (c->rows()[i].volume <= 0.0) {
        all_traded = false;
        break;
      }
    }
    if (all_traded) out.insert(target.rows()[i].date);
  }
  return out;
}

PricePair filter_pair(const PricePair& pair, const std::set<Date>& keep) {
  PricePair out;
  for (std::size_t i = 0; i < pair.size(); ++i) {
    if (!keep.contains(pair.dates[i])) continue;
    out.dates.push_back(pair.dates[i]);
    out.swap.push_back(pair.swap[i]);
    out.portfolio.push_back(pair.portfolio[i]);
    out.swap_volume.push_back(pair.swap_volume[i]);
    out.portfolio_volume.push_back(pair.portfolio_volume[i]);
  }
  return out;
}

ContinuousSeries restrict_series(const ContinuousSeries& s, const std::set<Date>& keep) {
  std::vector<SeriesRow> rows;
  for (const auto& r : s.rows()) {
    if (keep.contains(r.date)) rows.push_back(r);
  }
  return ContinuousSeries(s.label(), s.name(), std::move(rows), {});
}

}  // namespace tzeff
