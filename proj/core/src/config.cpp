#include "tzeff/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "tzeff/errors.hpp"
#include "tzeff/rng.hpp"

namespace tzeff {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  std::size_t b = s.find_last_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  return std::string(s.substr(a, b - a + 1));
}

double to_double(const std::string& v, const std::string& key) {
  double out = 0.0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size()) {
    fail(Errc::BadConfig, "bad number '" + v + "' for key " + key);
  }
  return out;
}

int to_int(const std::string& v, const std::string& key) {
  int out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size()) {
    fail(Errc::BadConfig, "bad integer '" + v + "' for key " + key);
  }
  return out;
}

bool to_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  fail(Errc::BadConfig, "bad boolean '" + v + "' for key " + key);
}

Segment to_segment(char c, const std::string& key) {
  switch (c) {
    case 'M': return Segment::Monthly;
    case 'Q': return Segment::Quarterly;
    case 'Y': return Segment::Yearly;
  }
  fail(Errc::BadConfig, std::string("bad segment '") + c + "' in key " + key);
}

}  // namespace

std::map<std::string, std::string> parse_kv_text(const std::string& text,
                                                 const std::string& origin) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      fail(Errc::BadConfig,
           origin + ":" + std::to_string(line_no) + ": expected 'key = value'");
    }
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    if (std::size_t hash = value.find(" #"); hash != std::string::npos) {
      value = trim(value.substr(0, hash));
    }
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key.empty()) {
      fail(Errc::BadConfig, origin + ":" + std::to_string(line_no) + ": empty key");
    }
    out[key] = value;
  }
  return out;
}

std::map<std::string, std::string> read_kv_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) fail(Errc::BadConfig, "cannot open config file " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kv_text(buf.str(), file.filename().string());
}

Config Config::defaults() {
  Config c;
  CostModel costs = CostModel::defaults();
  c.spreads = costs.spread_pct;
  c.fee = costs.trade_fee;
  c.code_prefixes = {
      {"F1BM", Segment::Monthly},  {"F1BQ", Segment::Quarterly}, {"F1BY", Segment::Yearly},
      {"FTBM", Segment::Monthly},  {"FTBQ", Segment::Quarterly}, {"FTBYR", Segment::Yearly},
  };
  return c;
}

Config Config::load(const std::filesystem::path& file) {
  Config c = defaults();
  auto kv = read_kv_file(file);
  for (const auto& [key, value] : kv) {
    if (key == "market") {
      c.market = value;
    } else if (key == "rate") {
      c.rate = to_double(value, key);
    } else if (key == "fee") {
      c.fee = to_double(value, key);
    } else if (key == "weight_mode") {
      if (value == "equal") {
        c.weight_mode = WeightMode::EqualApprox;
      } else if (value == "exact") {
        c.weight_mode = WeightMode::Exact;
      } else {
        fail(Errc::BadConfig, "weight_mode must be 'equal' or 'exact', got '" + value + "'");
      }
    } else if (key == "nw_lag") {
      if (value == "auto") {
        c.nw_lag.reset();
      } else {
        c.nw_lag = to_int(value, key);
      }
    } else if (key == "adjust") {
      if (value == "levelshift") {
        c.adjust = RollAdjust::LevelShift;
      } else if (value == "none") {
        c.adjust = RollAdjust::None;
      } else {
        fail(Errc::BadConfig, "adjust must be 'levelshift' or 'none', got '" + value + "'");
      }
    } else if (key == "gap_limit") {
      c.gap_limit = to_int(value, key);
    } else if (key == "full_spread_on_side") {
      c.full_spread_on_side = to_bool(value, key);
    } else if (key == "volume_filter") {
      c.volume_filter = to_bool(value, key);
    } else if (key == "cache_dir") {
      c.cache_dir = value;
    } else if (key == "holidays") {
      c.holidays.clear();
      std::istringstream hs(value);
      std::string tok;
      while (std::getline(hs, tok, ',')) {
        tok = trim(tok);
        if (!tok.empty()) c.holidays.push_back(parse_date(tok));
      }
    } else if (key.starts_with("spread.")) {
      // spread.<MARKET>.<M|Q|Y>
      std::size_t dot = key.find('.', 7);
      if (dot == std::string::npos || dot + 2 != key.size()) {
        fail(Errc::BadConfig, "bad spread key '" + key + "', expected spread.<market>.<M|Q|Y>");
      }
      std::string market = key.substr(7, dot - 7);
      Segment seg = to_segment(key[dot + 1], key);
      auto it = c.spreads.find(market);
      if (it == c.spreads.end()) it = c.spreads.emplace(market, std::array<double, 3>{}).first;
      it->second[std::size_t(seg)] = to_double(value, key);
    } else if (key.starts_with("code_prefix.")) {
      std::string prefix = key.substr(12);
      if (value.size() != 1) {
        fail(Errc::BadConfig, "code_prefix value must be one of M/Q/Y");
      }
      c.code_prefixes[prefix] = to_segment(value[0], key);
    } else {
      fail(Errc::BadConfig, "unknown config key '" + key + "'");
    }
  }
  return c;
}

CostModel Config::cost_model() const {
  CostModel m;
  m.trade_fee = fee;
  m.spread_pct = spreads;
  m.full_spread_on_side = full_spread_on_side;
  return m;
}

BusinessCalendar Config::calendar() const { return BusinessCalendar(holidays); }

SeriesBuildOptions Config::series_options() const {
  return SeriesBuildOptions{adjust, gap_limit, calendar()};
}

WeightScheme Config::weight_scheme() const { return WeightScheme{weight_mode, rate}; }

std::string Config::canonical() const {
  std::ostringstream out;
  out << "market=" << market << '\n';
  char buf[64];
  auto put = [&](const char* key, double v) {
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    out << key << '=' << buf << '\n';
  };
  put("rate", rate);
  put("fee", fee);
  out << "weight_mode=" << (weight_mode == WeightMode::Exact ? "exact" : "equal") << '\n';
  out << "nw_lag=" << (nw_lag ? std::to_string(*nw_lag) : "auto") << '\n';
  out << "adjust=" << (adjust == RollAdjust::LevelShift ? "levelshift" : "none") << '\n';
  out << "gap_limit=" << gap_limit << '\n';
  out << "full_spread_on_side=" << (full_spread_on_side ? "true" : "false") << '\n';
  out << "volume_filter=" << (volume_filter ? "true" : "false") << '\n';
  for (const auto& [m, arr] : spreads) {
    for (int s = 0; s < 3; ++s) {
      std::snprintf(buf, sizeof(buf), "%.12g", arr[std::size_t(s)]);
      out << "spread." << m << '.' << segment_code(Segment(s)) << '=' << buf << '\n';
    }
  }
  for (Date h : holidays) out << "holiday=" << format_date(h) << '\n';
  for (const auto& [p, seg] : code_prefixes) {
    out << "code_prefix." << p << '=' << segment_code(seg) << '\n';
  }
  return out.str();
}

std::uint64_t Config::hash() const { return rng::fnv1a64(canonical()); }

}  // namespace tzeff
