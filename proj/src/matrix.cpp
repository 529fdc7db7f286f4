#include "gvacast/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gvacast/errors.hpp"
#include "text_format.hpp"

namespace gvacast {

namespace {

std::string cell_label(SectorId s, FiscalQuarter fq) {
  return std::string(code(s)) + " " + fq.label();
}

}  // namespace

void GvaMatrix::set(SectorId s, FiscalQuarter fq, double value, bool estimated) {
  if (!std::isfinite(value) || value <= 0.0)
    throw Error(ErrorKind::NonPositiveValue,
                "value for " + cell_label(s, fq) + " must be finite and > 0, got " +
                    detail::format_full(value));
  auto& row = quarters_[fq];
  auto& slot = row[index_of(s)];
  if (slot.has_value())
    throw Error(ErrorKind::DuplicateKey, "duplicate entry for " + cell_label(s, fq));
  slot = GvaEntry{value, estimated};
}

double GvaMatrix::at(SectorId s, FiscalQuarter fq) const {
  if (const GvaEntry* e = find(s, fq)) return e->value;
  throw Error(ErrorKind::MissingEntry, "no entry for " + cell_label(s, fq));
}

const GvaEntry* GvaMatrix::find(SectorId s, FiscalQuarter fq) const noexcept {
  auto it = quarters_.find(fq);
  if (it == quarters_.end()) return nullptr;
  const auto& slot = it->second[index_of(s)];
  return slot.has_value() ? &*slot : nullptr;
}

bool GvaMatrix::contains(SectorId s, FiscalQuarter fq) const noexcept {
  return find(s, fq) != nullptr;
}

std::size_t GvaMatrix::size() const noexcept {
  std::size_t n = 0;
  for (const auto& [fq, row] : quarters_)
    for (const auto& slot : row)
      if (slot.has_value()) ++n;
  return n;
}

std::vector<int> GvaMatrix::fiscal_years() const {
  std::vector<int> years;
  for (const auto& [fq, row] : quarters_)
    if (years.empty() || years.back() != fq.fy_start()) years.push_back(fq.fy_start());
  return years;
}

bool GvaMatrix::has_full_year(int fy_start) const {
  return missing_quarters(fy_start).empty();
}

std::vector<FiscalQuarter> GvaMatrix::missing_quarters(int fy_start) const {
  std::vector<FiscalQuarter> missing;
  for (int q = 1; q <= 4; ++q) {
    FiscalQuarter fq(fy_start, q);
    bool complete = true;
    for (SectorId s : kAllSectors)
      if (!contains(s, fq)) {
        complete = false;
        break;
      }
    if (!complete) missing.push_back(fq);
  }
  return missing;
}

std::vector<FiscalQuarter> GvaMatrix::quarters() const {
  std::vector<FiscalQuarter> out;
  out.reserve(quarters_.size());
  for (const auto& [fq, row] : quarters_) out.push_back(fq);
  return out;
}

void GvaMatrix::add_provenance(const std::string& note) {
  if (note.empty()) return;
  if (!provenance_.empty()) provenance_ += "; ";
  provenance_ += note;
}

double quarter_total(const GvaMatrix& m, const SectorGroup& group, FiscalQuarter fq) {
  double total = 0.0;
  for (SectorId s : group.members()) total += m.at(s, fq);
  return total;
}

double annual_total(const GvaMatrix& m, const SectorGroup& group, int fy_start) {
  for (int q = 1; q <= 4; ++q) {
    FiscalQuarter fq(fy_start, q);
    for (SectorId s : group.members())
      if (!m.contains(s, fq))
        throw Error(ErrorKind::PartialYear,
                    "fiscal year " + std::to_string(fy_start) + " lacks " +
                        std::string(code(s)) + " " + fq.label());
  }
  double total = 0.0;
  for (int q = 1; q <= 4; ++q) total += quarter_total(m, group, FiscalQuarter(fy_start, q));
  return total;
}

GvaMatrix merge(const GvaMatrix& a, const GvaMatrix& b) {
  std::set<FiscalQuarter> all_quarters;
  for (const auto& [fq, row] : a.rows()) all_quarters.insert(fq);
  for (const auto& [fq, row] : b.rows()) all_quarters.insert(fq);

  GvaMatrix out;
  for (FiscalQuarter fq : all_quarters) {
    for (SectorId s : kAllSectors) {
      const GvaEntry* ea = a.find(s, fq);
      const GvaEntry* eb = b.find(s, fq);
      if (ea && eb) {
        double scale = std::max(std::abs(ea->value), std::abs(eb->value));
        if (std::abs(ea->value - eb->value) > 1e-12 * scale)
          throw Error(ErrorKind::ConflictingEntry,
                      cell_label(s, fq) + " has conflicting values " +
                          detail::format_full(ea->value) + " and " +
                          detail::format_full(eb->value));
        // Equal overlap keeps the first value; the entry stays flagged as
        // estimated if either side was.
        out.set(s, fq, ea->value, ea->estimated || eb->estimated);
      } else if (ea || eb) {
        const GvaEntry* e = ea ? ea : eb;
        out.set(s, fq, e->value, e->estimated);
      }
    }
  }

  out.add_provenance(a.provenance());
  out.add_provenance(b.provenance());
  return out;
}

}  // namespace gvacast
