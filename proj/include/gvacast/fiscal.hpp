#pragma once

#include <compare>
#include <string>

namespace gvacast {

// A quarter coordinate in the Indian fiscal calendar: fy_start is the
// calendar year the fiscal year begins in (2019 means "2019-20"), and
// Q1 covers April-June. Ordering is lexicographic (fy_start, quarter).
class FiscalQuarter {
public:
  // Throws Error{BadQuarter} for quarter outside 1..4 and
  // Error{InvalidArgument} for a year outside 2011..9999.
  FiscalQuarter(int fy_start, int quarter);

  int fy_start() const noexcept { return fy_start_; }
  int quarter() const noexcept { return quarter_; }

  // Same quarter of the previous fiscal year.
  FiscalQuarter prev_year() const { return FiscalQuarter(fy_start_ - 1, quarter_); }

  // "2019Q1" style label used in plot series.
  std::string label() const;

  friend auto operator<=>(const FiscalQuarter&, const FiscalQuarter&) = default;

private:
  int fy_start_;
  int quarter_;
};

}  // namespace gvacast
