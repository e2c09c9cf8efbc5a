#include "tzeff/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "tzeff/config.hpp"
#include "tzeff/errors.hpp"
#include "tzeff/rng.hpp"

namespace tzeff {

namespace {

constexpr double kPriceFloor = 1.0;    // keeps generated prices positive
constexpr double kLotVolume = 1000.0;  // MWh traded on an active day

struct MonthKey {
  int index;  // absolute month: year*12 + (month-1)
  std::string code() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "M-%04d-%02d", index / 12, index % 12 + 1);
    return buf;
  }
};

struct QuarterKey {
  int index;  // absolute quarter: year*4 + (quarter-1)
  std::string code() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "Q-%04dQ%d", index / 4, index % 4 + 1);
    return buf;
  }
};

// Price engine: lazily materialized per-contract noise streams on top of the
// shared driving walk, so a contract's prices do not depend on which other
// contracts are emitted.
class MarketEngine {
public:
  MarketEngine(const ScenarioSpec& spec, std::vector<Date> days)
      : spec_(spec), days_(std::move(days)) {
    rng::Xoshiro256pp walk(rng::derive_seed(spec_.seed, "walk"));
    walk_.resize(days_.size());
    double log_price = std::log(spec_.base_price);
    for (std::size_t t = 0; t < days_.size(); ++t) {
      if (t > 0) log_price += spec_.rw_vol * walk.normal();
      walk_[t] = std::exp(log_price);
    }
  }

  const std::vector<Date>& days() const { return days_; }

  double monthly_price(MonthKey m, std::size_t t) {
    double p = walk_[t] + noise(m.code())[t];
    return std::max(p, kPriceFloor);
  }

  double quarterly_price(QuarterKey q, std::size_t t) {
    int first_month = (q.index / 4) * 12 + (q.index % 4) * 3;
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) sum += monthly_price(MonthKey{first_month + i}, t);
    double p = sum / 3.0 + spec_.bias_alpha + noise(q.code())[t];
    return std::max(p, kPriceFloor);
  }

  double yearly_price(int year, std::size_t t) {
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) sum += quarterly_price(QuarterKey{year * 4 + i}, t);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "Y-%04d", year);
    double p = sum / 4.0 + spec_.bias_alpha + noise(buf)[t];
    return std::max(p, kPriceFloor);
  }

  // Activity is day-wide: a quiet day has zero volume in every contract.
  double volume(std::size_t t) {
    switch (spec_.volume.kind) {
      case VolumePatternKind::AlwaysOn:
        return kLotVolume;
      case VolumePatternKind::MonthlyDrought:
        return spec_.volume.dry_months.contains(month_of(days_[t])) ? 0.0 : kLotVolume;
      case VolumePatternKind::Bernoulli:
        return day_draws()[t] < spec_.volume.p ? kLotVolume : 0.0;
    }
    return kLotVolume;
  }

private:
  const std::vector<double>& noise(const std::string& code) {
    auto it = noise_.find(code);
    if (it == noise_.end()) {
      std::vector<double> v(days_.size(), 0.0);
      if (spec_.noise_vol > 0.0) {
        rng::Xoshiro256pp gen(rng::derive_seed(spec_.seed, "noise|" + code));
        for (double& x : v) x = spec_.noise_vol * gen.normal();
      }
      it = noise_.emplace(code, std::move(v)).first;
    }
    return it->second;
  }

  const std::vector<double>& day_draws() {
    if (day_draws_.empty()) {
      day_draws_.resize(days_.size());
      rng::Xoshiro256pp gen(rng::derive_seed(spec_.seed, "volume"));
      for (double& x : day_draws_) x = gen.uniform01();
    }
    return day_draws_;
  }

  ScenarioSpec spec_;
  std::vector<Date> days_;
  std::vector<double> walk_;
  std::map<std::string, std::vector<double>> noise_;
  std::vector<double> day_draws_;
};

}  // namespace

std::vector<PriceObservation> gen_market(const ScenarioSpec& spec) {
  if (spec.n_days < 30) fail(Errc::BadConfig, "scenario needs n_days >= 30");
  if (spec.rw_vol < 0.0 || spec.noise_vol < 0.0) {
    fail(Errc::BadConfig, "volatilities must be non-negative");
  }
  if (spec.base_price <= 0.0) fail(Errc::BadConfig, "base_price must be positive");
  if (spec.volume.kind == VolumePatternKind::Bernoulli &&
      (spec.volume.p < 0.0 || spec.volume.p > 1.0)) {
    fail(Errc::BadConfig, "bernoulli volume probability must be in [0, 1]");
  }

  BusinessCalendar cal;
  std::vector<Date> days;
  days.reserve(spec.n_days);
  Date d = cal.next_business_day(spec.start);
  while (int(days.size()) < spec.n_days) {
    days.push_back(d);
    d = cal.next_business_day(Date{std::chrono::sys_days{d} + std::chrono::days{1}});
  }

  MarketEngine engine(spec, days);
  std::vector<PriceObservation> out;
  for (std::size_t t = 0; t < engine.days().size(); ++t) {
    Date day = engine.days()[t];
    double vol = engine.volume(t);
    if (spec.emit_monthly) {
      for (int j = 1; j <= kMaxMonthlyIndex; ++j) {
        MonthKey key{month_index(day) + j};
        out.push_back({day, key.code(), engine.monthly_price(key, t), vol});
      }
    }
    if (spec.emit_quarterly) {
      int q0 = year_of(day) * 4 + quarter_of(day) - 1;
      for (int b = 1; b <= kMaxQuarterlyIndex; ++b) {
        QuarterKey key{q0 + b};
        out.push_back({day, key.code(), engine.quarterly_price(key, t), vol});
      }
    }
    if (spec.emit_yearly) {
      int year = year_of(day) + 1;
      char buf[16];
      std::snprintf(buf, sizeof(buf), "Y-%04d", year);
      out.push_back({day, buf, engine.yearly_price(year, t), vol});
    }
  }
  std::sort(out.begin(), out.end(), [](const PriceObservation& a, const PriceObservation& b) {
    if (a.date != b.date) return a.date < b.date;
    return a.contract_code < b.contract_code;
  });
  return out;
}

SeriesPair gen_unit_root_pair(std::uint64_t seed, int n, const PairSpec& spec) {
  if (n < 2) fail(Errc::BadConfig, "pair length must be at least 2");
  rng::Xoshiro256pp gx(rng::derive_seed(seed, "pair|x"));
  rng::Xoshiro256pp gy(rng::derive_seed(seed, "pair|y"));

  SeriesPair out;
  out.x.resize(n);
  out.y.resize(n);
  switch (spec.mode) {
    case PairMode::CointegratedGap: {
      double u = 0.0;
      out.x[0] = spec.base;
      out.y[0] = spec.base + spec.alpha;
      for (int t = 1; t < n; ++t) {
        out.x[t] = out.x[t - 1] + spec.rw_vol * gx.normal();
        u = spec.phi * u + spec.noise_sd * gy.normal();
        out.y[t] = out.x[t] + spec.alpha + u;
      }
      break;
    }
    case PairMode::IndependentWalks: {
      out.x[0] = spec.base;
      out.y[0] = spec.base;
      for (int t = 1; t < n; ++t) {
        out.x[t] = out.x[t - 1] + spec.rw_vol * gx.normal();
        out.y[t] = out.y[t - 1] + spec.rw_vol * gy.normal();
      }
      break;
    }
    case PairMode::StationaryBoth: {
      double sx = 0.0, sy = 0.0;
      out.x[0] = spec.base;
      out.y[0] = spec.base;
      for (int t = 1; t < n; ++t) {
        sx = spec.phi * sx + spec.rw_vol * gx.normal();
        sy = spec.phi * sy + spec.rw_vol * gy.normal();
        out.x[t] = spec.base + sx;
        out.y[t] = spec.base + sy;
      }
      break;
    }
  }
  return out;
}

ScenarioSpec ScenarioSpec::load(const std::filesystem::path& file) {
  ScenarioSpec spec;
  auto kv = read_kv_file(file);
  for (const auto& [key, value] : kv) {
    try {
      if (key == "seed") {
        spec.seed = std::stoull(value);
      } else if (key == "n_days") {
        spec.n_days = std::stoi(value);
      } else if (key == "base_price") {
        spec.base_price = std::stod(value);
      } else if (key == "rw_vol") {
        spec.rw_vol = std::stod(value);
      } else if (key == "bias_alpha") {
        spec.bias_alpha = std::stod(value);
      } else if (key == "noise_vol") {
        spec.noise_vol = std::stod(value);
      } else if (key == "start") {
        spec.start = parse_date(value);
      } else if (key == "market") {
        spec.market = value;
      } else if (key == "segments") {
        spec.emit_monthly = value.find('M') != std::string::npos;
        spec.emit_quarterly = value.find('Q') != std::string::npos;
        spec.emit_yearly = value.find('Y') != std::string::npos;
      } else if (key == "volume_pattern") {
        if (value == "always_on") {
          spec.volume = VolumePattern::always_on();
        } else if (value.starts_with("drought:")) {
          std::set<int> months;
          std::string rest = value.substr(8);
          std::size_t pos = 0;
          while (pos < rest.size()) {
            std::size_t comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            months.insert(std::stoi(rest.substr(pos, comma - pos)));
            pos = comma + 1;
          }
          spec.volume = VolumePattern::monthly_drought(std::move(months));
        } else if (value.starts_with("bernoulli:")) {
          spec.volume = VolumePattern::bernoulli(std::stod(value.substr(10)));
        } else {
          fail(Errc::BadConfig, "unknown volume_pattern '" + value + "'");
        }
      } else {
        fail(Errc::BadConfig, "unknown scenario key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      fail(Errc::BadConfig, "bad value '" + value + "' for scenario key " + key);
    } catch (const std::out_of_range&) {
      fail(Errc::BadConfig, "value out of range for scenario key " + key);
    }
  }
  return spec;
}

}  // namespace tzeff
