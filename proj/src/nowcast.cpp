#include "gvacast/nowcast.hpp"

#include <string>

#include "gvacast/errors.hpp"

namespace gvacast {

GvaMatrix estimate_quarter(const GvaMatrix& base, FiscalQuarter target,
                           const ShockSpec& shocks) {
  for (SectorId s : kAllSectors) {
    if (base.contains(s, target))
      throw Error(ErrorKind::ConflictingEntry,
                  "target quarter " + target.label() + " already has data for " +
                      std::string(code(s)));
  }
  const FiscalQuarter prior = target.prev_year();
  GvaMatrix out;
  for (SectorId s : kAllSectors)
    out.set(s, target, base.at(s, prior) * (1.0 + shocks.growth(s)),
            /*estimated=*/true);
  out.add_provenance("estimated " + target.label() + " from " + prior.label() +
                     " under shock spec '" + shocks.label() + "'");
  return out;
}

GvaMatrix complete_fiscal_year(const GvaMatrix& base, int fy_start,
                               const ShockSpec& shocks) {
  const auto missing = base.missing_quarters(fy_start);
  if (missing.empty())
    throw Error(ErrorKind::NothingMissing,
                "fiscal year " + std::to_string(fy_start) +
                    " already has all four quarters for every sector");
  if (missing.size() > 1) {
    std::string gaps;
    for (const auto& fq : missing) {
      if (!gaps.empty()) gaps += ", ";
      gaps += fq.label();
    }
    throw Error(ErrorKind::MultipleMissing,
                "fiscal year " + std::to_string(fy_start) +
                    " is missing more than one quarter: " + gaps);
  }
  return merge(base, estimate_quarter(base, missing.front(), shocks));
}

}  // namespace gvacast
