#include "gvacast/sectors.hpp"

#include <algorithm>

#include "gvacast/errors.hpp"

namespace gvacast {

namespace {

constexpr std::array<std::string_view, kSectorCount> kCodes = {
    "AGR", "MIN", "MFG", "UTL", "CON", "TRD", "FIN", "PUB",
};

constexpr std::array<std::string_view, kSectorCount> kDisplayNames = {
    "Agriculture, Forestry and Fishing",
    "Mining & Quarrying",
    "Manufacturing",
    "Electricity, Gas, Water Supply & Other Utility",
    "Construction",
    "Trade, Hotels, Transport, Communication and Broadcasting",
    "Financial, Real Estate and Professional Services",
    "Public Administration, Defence and Other Services",
};

}  // namespace

std::string_view code(SectorId s) { return kCodes[index_of(s)]; }

std::string_view display_name(SectorId s) { return kDisplayNames[index_of(s)]; }

std::optional<SectorId> sector_from_code(std::string_view token) {
  for (std::size_t i = 0; i < kSectorCount; ++i)
    if (kCodes[i] == token) return static_cast<SectorId>(i);
  return std::nullopt;
}

SectorGroup::SectorGroup(std::string name, std::vector<SectorId> members)
    : name_(std::move(name)), members_(std::move(members)) {
  if (members_.empty())
    throw Error(ErrorKind::InvalidArgument, "sector group '" + name_ + "' has no members");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SectorGroup::contains(SectorId s) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), s);
}

const SectorGroup& primary_group() {
  static const SectorGroup g("PRIMARY", {SectorId::AGR, SectorId::MIN});
  return g;
}

const SectorGroup& secondary_group() {
  static const SectorGroup g("SECONDARY", {SectorId::MFG, SectorId::UTL, SectorId::CON});
  return g;
}

const SectorGroup& tertiary_group() {
  static const SectorGroup g("TERTIARY", {SectorId::TRD, SectorId::FIN, SectorId::PUB});
  return g;
}

const SectorGroup& total_group() {
  static const SectorGroup g("TOTAL",
                             std::vector<SectorId>(kAllSectors.begin(), kAllSectors.end()));
  return g;
}

SectorGroup singleton_group(SectorId s) {
  return SectorGroup(std::string(code(s)), {s});
}

std::optional<SectorGroup> group_from_name(std::string_view token) {
  if (token == "PRIMARY") return primary_group();
  if (token == "SECONDARY") return secondary_group();
  if (token == "TERTIARY") return tertiary_group();
  if (token == "TOTAL") return total_group();
  if (auto s = sector_from_code(token)) return singleton_group(*s);
  return std::nullopt;
}

}  // namespace gvacast
