#pragma once

#include <array>
#include <string>

#include "gvacast/sectors.hpp"

namespace gvacast {

// Per-sector one-quarter growth shocks used by the nowcast (e.g. -0.06 for
// a 6% contraction). Complete over all 8 sectors; each growth > -1 and finite.
class ShockSpec {
public:
  // Throws Error{GrowthOutOfRange} on non-finite or <= -1 entries.
  ShockSpec(std::array<double, kSectorCount> growth, std::string label);

  double growth(SectorId s) const noexcept { return growth_[index_of(s)]; }
  const std::array<double, kSectorCount>& growths() const noexcept { return growth_; }
  const std::string& label() const noexcept { return label_; }

private:
  std::array<double, kSectorCount> growth_;
  std::string label_;
};

// Capacity-utilization factors per (sector, quarter-of-year). Factors apply
// to quarter positions 1..4, not absolute quarters, so a schedule is
// reusable against any baseline year. Factors above 2 are rejected as
// implausible (guard against unit typos); factors > 1 mean projected growth.
class UtilizationSchedule {
public:
  using Grid = std::array<std::array<double, 4>, kSectorCount>;

  // Throws Error{FactorOutOfRange} on non-finite, negative, or > 2 factors.
  UtilizationSchedule(Grid factors, std::string label);

  double factor(SectorId s, int quarter) const;  // quarter in 1..4
  const Grid& factors() const noexcept { return factors_; }
  const std::string& label() const noexcept { return label_; }

private:
  Grid factors_;
  std::string label_;
};

}  // namespace gvacast
