#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gvacast/fiscal.hpp"
#include "gvacast/sectors.hpp"

namespace gvacast {

struct GvaEntry {
  double value = 0.0;
  // True for values produced by the nowcast or scenario projection rather
  // than observed data; markdown reports asterisk such cells.
  bool estimated = false;
};

// The central series store: (sector x fiscal quarter) -> strictly positive
// constant-price GVA level. Values are immutable once inserted; there is at
// most one entry per key.
class GvaMatrix {
public:
  // Inserts an entry. Throws Error{NonPositiveValue} unless the value is
  // finite and > 0, and Error{DuplicateKey} if the key is already present.
  void set(SectorId s, FiscalQuarter fq, double value, bool estimated = false);

  // Value at (s, fq); throws Error{MissingEntry} if absent.
  double at(SectorId s, FiscalQuarter fq) const;

  // Entry at (s, fq) or nullptr if absent.
  const GvaEntry* find(SectorId s, FiscalQuarter fq) const noexcept;

  bool contains(SectorId s, FiscalQuarter fq) const noexcept;
  bool empty() const noexcept { return quarters_.empty(); }
  std::size_t size() const noexcept;

  // Distinct fiscal years with at least one entry, ascending.
  std::vector<int> fiscal_years() const;

  // True iff all 8 sectors are present for all 4 quarters of fy.
  bool has_full_year(int fy_start) const;

  // Quarters of fy in which at least one sector is absent, ascending.
  std::vector<FiscalQuarter> missing_quarters(int fy_start) const;

  // Quarters present (any sector), ascending.
  std::vector<FiscalQuarter> quarters() const;

  const std::string& provenance() const noexcept { return provenance_; }
  void add_provenance(const std::string& note);

  // Entries of one quarter in ascending sector order (nullopt = absent).
  using QuarterRow = std::array<std::optional<GvaEntry>, kSectorCount>;
  const std::map<FiscalQuarter, QuarterRow>& rows() const noexcept { return quarters_; }

private:
  std::map<FiscalQuarter, QuarterRow> quarters_;
  std::string provenance_;
};

// Sum over the group's members at fq, accumulated in ascending sector-code
// order (bit-reproducible). Throws Error{MissingEntry} for an absent member.
double quarter_total(const GvaMatrix& m, const SectorGroup& group, FiscalQuarter fq);

// Sum over quarters 1..4 of quarter_total, in ascending quarter order, so
// annual_total == sum of the four quarter totals bit-exactly.
// Throws Error{PartialYear} if any member-quarter of fy is absent.
double annual_total(const GvaMatrix& m, const SectorGroup& group, int fy_start);

// Union of two matrices. Overlapping keys must agree within relative 1e-12
// (the first operand's value is kept, estimated flags are OR-ed); unequal
// overlap throws Error{ConflictingEntry}. Provenance notes concatenate.
GvaMatrix merge(const GvaMatrix& a, const GvaMatrix& b);

}  // namespace gvacast
