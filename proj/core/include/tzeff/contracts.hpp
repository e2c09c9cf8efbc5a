#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace tzeff {

enum class Segment { Monthly, Quarterly, Yearly };

char segment_code(Segment s);

// Relative identity of a tradable series.
//
// Monthly labels M1..M6 deliver `index` months ahead. Quarterly labels Qbc
// deliver `index` (= b, 1..7) quarters ahead and trade in quarter
// `trade_quarter` (= c, 1..4). The single yearly label Y1 delivers next year.
struct ContractLabel {
  Segment segment = Segment::Monthly;
  int index = 1;          // j / b / f
  int trade_quarter = 0;  // c, quarterly only

  static ContractLabel monthly(int j);
  static ContractLabel quarterly(int b, int c);
  static ContractLabel yearly(int f = 1);

  // Canonical text form: M1..M6, Q11..Q74, Y1. parse(str(x)) == x.
  static ContractLabel parse(std::string_view text);
  std::string str() const;

  auto operator<=>(const ContractLabel&) const = default;
};

static constexpr int kMaxMonthlyIndex = 6;
static constexpr int kMaxQuarterlyIndex = 7;  // Y1 replication reaches b = 7

}  // namespace tzeff
