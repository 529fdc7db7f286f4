#pragma once

#include <iosfwd>
#include <string>

#include "gvacast/inputs.hpp"
#include "gvacast/matrix.hpp"

namespace gvacast {

// GVA series CSV: header exactly `fy_start,quarter,sector,value`, one entry
// per data row. Lines starting with `#` are comments; LF and CRLF are both
// accepted. Errors: UnknownSector, BadQuarter, NonPositiveValue,
// DuplicateKey, MalformedRow — each naming the line.
GvaMatrix parse_gva_csv(std::istream& in);

// Canonical serialization: header + rows sorted by (fy_start, quarter,
// sector), values at full precision (shortest round-trip form), LF endings.
// parse(serialize(m)) reproduces every key and value bit-exactly. The
// estimated markers and provenance notes are in-memory annotations and are
// not part of the interchange format.
std::string serialize_gva_csv(const GvaMatrix& m);

// Utilization schedule CSV: header `sector,q1,q2,q3,q4`, exactly 8 data
// rows, one per sector. Errors: MissingSector, ExtraRow, FactorOutOfRange,
// MalformedRow, UnknownSector.
UtilizationSchedule parse_schedule_csv(std::istream& in, std::string label = "");
std::string serialize_schedule_csv(const UtilizationSchedule& sched);

// Shock CSV: header `sector,growth`, exactly 8 data rows; growth <= -1 is
// rejected. Error family mirrors parse_schedule_csv.
ShockSpec parse_shock_csv(std::istream& in, std::string label = "");
std::string serialize_shock_csv(const ShockSpec& shocks);

// Reads a rendered one-year GVA table (header `sector,q1,q2,q3,q4,total`,
// 8 sector rows + TOTAL row) back into a matrix for fy_start. The total
// column and TOTAL row are layout, not data, and are ignored.
GvaMatrix parse_gva_table_csv(std::istream& in, int fy_start);

}  // namespace gvacast
