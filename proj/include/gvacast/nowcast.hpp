#pragma once

#include "gvacast/fiscal.hpp"
#include "gvacast/inputs.hpp"
#include "gvacast/matrix.hpp"

namespace gvacast {

// Estimates one missing quarter from the same quarter a year earlier:
// out[s, target] = base[s, prev_year(target)] * (1 + shocks[s]) for all 8
// sectors. Entries are flagged estimated; provenance records the shock
// label. Throws Error{MissingEntry} if prior-year data is absent and
// Error{ConflictingEntry} if base already holds target-quarter data.
GvaMatrix estimate_quarter(const GvaMatrix& base, FiscalQuarter target,
                           const ShockSpec& shocks);

// Completes a fiscal year that is missing exactly one quarter by merging
// base with the estimate for that quarter. Throws Error{NothingMissing} if
// the year is already complete and Error{MultipleMissing} naming the gaps
// if more than one quarter is incomplete.
GvaMatrix complete_fiscal_year(const GvaMatrix& base, int fy_start,
                               const ShockSpec& shocks);

}  // namespace gvacast
