#include "tzeff/contracts.hpp"

#include "tzeff/errors.hpp"

namespace tzeff {

char segment_code(Segment s) {
  switch (s) {
    case Segment::Monthly: return 'M';
    case Segment::Quarterly: return 'Q';
    case Segment::Yearly: return 'Y';
  }
  return '?';
}

ContractLabel ContractLabel::monthly(int j) {
  if (j < 1 || j > kMaxMonthlyIndex) {
    fail(Errc::InvalidLabel, "monthly index out of range: M" + std::to_string(j));
  }
  return {Segment::Monthly, j, 0};
}

ContractLabel ContractLabel::quarterly(int b, int c) {
  if (b < 1 || b > kMaxQuarterlyIndex || c < 1 || c > 4) {
    fail(Errc::InvalidLabel,
         "quarterly label out of range: Q" + std::to_string(b) + std::to_string(c));
  }
  return {Segment::Quarterly, b, c};
}

ContractLabel ContractLabel::yearly(int f) {
  if (f != 1) {
    fail(Errc::InvalidLabel, "only Y1 is supported, got Y" + std::to_string(f));
  }
  return {Segment::Yearly, f, 0};
}

ContractLabel ContractLabel::parse(std::string_view text) {
  auto bad = [&] { fail(Errc::InvalidLabel, "unrecognized contract label '" + std::string(text) + "'"); };
  if (text.size() < 2 || text.size() > 3) bad();
  auto digit = [&](char ch) {
    if (ch < '0' || ch > '9') bad();
    return ch - '0';
  };
  switch (text[0]) {
    case 'M':
      if (text.size() != 2) bad();
      return monthly(digit(text[1]));
    case 'Q':
      if (text.size() != 3) bad();
      return quarterly(digit(text[1]), digit(text[2]));
    case 'Y':
      if (text.size() != 2) bad();
      return yearly(digit(text[1]));
    default:
      bad();
  }
  return {};  // unreachable
}

std::string ContractLabel::str() const {
  std::string out(1, segment_code(segment));
  out += std::to_string(index);
  if (segment == Segment::Quarterly) out += std::to_string(trade_quarter);
  return out;
}

}  // namespace tzeff
