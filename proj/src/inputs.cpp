#include "gvacast/inputs.hpp"

#include <cmath>

#include "gvacast/errors.hpp"
#include "text_format.hpp"

namespace gvacast {

ShockSpec::ShockSpec(std::array<double, kSectorCount> growth, std::string label)
    : growth_(growth), label_(std::move(label)) {
  for (SectorId s : kAllSectors) {
    double g = growth_[index_of(s)];
    if (!std::isfinite(g) || g <= -1.0)
      throw Error(ErrorKind::GrowthOutOfRange,
                  "growth for " + std::string(code(s)) + " must be finite and > -1, got " +
                      detail::format_full(g));
  }
}

UtilizationSchedule::UtilizationSchedule(Grid factors, std::string label)
    : factors_(factors), label_(std::move(label)) {
  for (SectorId s : kAllSectors) {
    for (int q = 1; q <= 4; ++q) {
      double u = factors_[index_of(s)][q - 1];
      if (!std::isfinite(u) || u < 0.0 || u > 2.0)
        throw Error(ErrorKind::FactorOutOfRange,
                    "factor for " + std::string(code(s)) + " q" + std::to_string(q) +
                        " must lie in [0, 2], got " + detail::format_full(u));
    }
  }
}

double UtilizationSchedule::factor(SectorId s, int quarter) const {
  if (quarter < 1 || quarter > 4)
    throw Error(ErrorKind::BadQuarter,
                "quarter must be 1..4, got " + std::to_string(quarter));
  return factors_[index_of(s)][quarter - 1];
}

}  // namespace gvacast
