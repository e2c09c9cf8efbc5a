#pragma once

#include <stdexcept>
#include <string>

namespace tzeff {

enum class Errc {
  InvalidLabel,
  InvalidSeries,
  ParseError,
  DuplicateKey,
  NonPositivePrice,
  GapTooLong,
  Misaligned,
  TooShort,
  Degenerate,
  NumericFailure,
  NotReplicable,
  EmptySeries,
  MissingData,
  BadConfig,
};

const char* errc_name(Errc code);

// Domain error carrying a machine-readable code plus a human message.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidLabel: return "invalid_label";
    case Errc::InvalidSeries: return "invalid_series";
    case Errc::ParseError: return "parse_error";
    case Errc::DuplicateKey: return "duplicate_key";
    case Errc::NonPositivePrice: return "non_positive_price";
    case Errc::GapTooLong: return "gap_too_long";
    case Errc::Misaligned: return "misaligned";
    case Errc::TooShort: return "too_short";
    case Errc::Degenerate: return "degenerate";
    case Errc::NumericFailure: return "numeric_failure";
    case Errc::NotReplicable: return "not_replicable";
    case Errc::EmptySeries: return "empty_series";
    case Errc::MissingData: return "missing_data";
    case Errc::BadConfig: return "bad_config";
  }
  return "unknown";
}

}  // namespace tzeff
