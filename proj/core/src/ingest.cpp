#include "tzeff/ingest.hpp"

#include <zlib.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "tzeff/errors.hpp"
#include "tzeff/series.hpp"

namespace tzeff {

namespace {

constexpr const char* kHeader = "date,contract_code,settle,volume";

double parse_double(std::string_view s, int line, const char* field) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || !std::isfinite(v)) {
    fail(Errc::ParseError, std::string("bad ") + field + " '" + std::string(s) + "', line " +
                               std::to_string(line));
  }
  return v;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string format_double(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

std::string gunzip_file(const std::filesystem::path& path) {
  gzFile f = gzopen(path.string().c_str(), "rb");
  if (!f) fail(Errc::ParseError, "cannot open " + path.string());
  std::string out;
  char buf[1 << 16];
  int n = 0;
  while ((n = gzread(f, buf, sizeof(buf))) > 0) out.append(buf, n);
  bool ok = n == 0;
  gzclose(f);
  if (!ok) fail(Errc::ParseError, "gzip read failed for " + path.string());
  return out;
}

}  // namespace

std::vector<PriceObservation> parse_price_file(std::istream& in,
                                               std::vector<std::string>* warnings) {
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) fail(Errc::ParseError, "empty input, missing header");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader) {
    fail(Errc::ParseError, "bad header '" + line + "', expected '" + kHeader + "'");
  }

  std::vector<PriceObservation> out;
  std::map<std::pair<std::string, Date>, int> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() != 4 && fields.size() != 3) {
      fail(Errc::ParseError, "expected 4 fields, got " + std::to_string(fields.size()) +
                                 ", line " + std::to_string(line_no));
    }

    PriceObservation obs;
    try {
      obs.date = parse_date(fields[0]);
    } catch (const Error& e) {
      fail(Errc::ParseError, std::string(e.what()) + ", line " + std::to_string(line_no));
    }
    obs.contract_code = std::string(fields[1]);
    if (obs.contract_code.empty()) {
      fail(Errc::ParseError, "empty contract_code, line " + std::to_string(line_no));
    }
    obs.settle = parse_double(fields[2], line_no, "settle");
    if (obs.settle <= 0.0) {
      fail(Errc::NonPositivePrice, "non-positive settlement, line " + std::to_string(line_no));
    }
    if (fields.size() == 3 || fields[3].empty()) {
      obs.volume = 0.0;
      if (warnings) {
        warnings->push_back("missing volume treated as 0, line " + std::to_string(line_no));
      }
    } else {
      obs.volume = parse_double(fields[3], line_no, "volume");
      if (obs.volume < 0.0) {
        fail(Errc::ParseError, "negative volume, line " + std::to_string(line_no));
      }
    }

    auto [it, inserted] = seen.emplace(std::make_pair(obs.contract_code, obs.date), line_no);
    if (!inserted) {
      fail(Errc::DuplicateKey, "duplicate (" + format_date(obs.date) + ", " + obs.contract_code +
                                   "), lines " + std::to_string(it->second) + " and " +
                                   std::to_string(line_no));
    }
    out.push_back(std::move(obs));
  }
  return out;
}

std::vector<PriceObservation> read_price_file(const std::filesystem::path& path,
                                              std::vector<std::string>* warnings) {
  if (path.extension() == ".gz") {
    std::istringstream in(gunzip_file(path));
    return parse_price_file(in, warnings);
  }
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path.string());
  return parse_price_file(in, warnings);
}

void write_price_file(std::ostream& out, std::span<const PriceObservation> observations) {
  out << kHeader << '\n';
  for (const auto& obs : observations) {
    out << format_date(obs.date) << ',' << obs.contract_code << ',' << format_double(obs.settle)
        << ',' << format_double(obs.volume) << '\n';
  }
}

void write_price_file(const std::filesystem::path& path,
                      std::span<const PriceObservation> observations) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::ParseError, "cannot write " + path.string());
  write_price_file(out, observations);
}

std::vector<PriceObservation> normalize_contract_codes(
    std::vector<PriceObservation> observations, const std::map<std::string, Segment>& prefixes) {
  for (auto& obs : observations) {
    if (parse_contract_code(obs.contract_code)) continue;
    std::size_t dash = obs.contract_code.find('-');
    std::string prefix =
        dash == std::string::npos ? obs.contract_code : obs.contract_code.substr(0, dash);
    auto it = prefixes.find(prefix);
    if (it == prefixes.end()) {
      fail(Errc::ParseError, "unknown contract code '" + obs.contract_code + "'");
    }
    std::string candidate =
        std::string(1, segment_code(it->second)) + obs.contract_code.substr(dash);
    if (!parse_contract_code(candidate)) {
      fail(Errc::ParseError, "cannot normalize contract code '" + obs.contract_code + "'");
    }
    obs.contract_code = std::move(candidate);
  }
  return observations;
}

}  // namespace tzeff
