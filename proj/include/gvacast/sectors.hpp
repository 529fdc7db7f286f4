#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gvacast {

// The 8 GVA sectors of the Indian quarterly national accounts, in the
// canonical row order used throughout: this ordinal order is also the
// fixed summation order that makes totals bit-reproducible.
enum class SectorId : int {
  AGR = 0,  // Agriculture, Forestry and Fishing
  MIN,      // Mining & Quarrying
  MFG,      // Manufacturing
  UTL,      // Electricity, Gas, Water Supply & Other Utility
  CON,      // Construction
  TRD,      // Trade, Hotels, Transport, Communication and Broadcasting
  FIN,      // Financial, Real Estate and Professional Services
  PUB,      // Public Administration, Defence and Other Services
};

inline constexpr std::size_t kSectorCount = 8;

inline constexpr std::array<SectorId, kSectorCount> kAllSectors = {
    SectorId::AGR, SectorId::MIN, SectorId::MFG, SectorId::UTL,
    SectorId::CON, SectorId::TRD, SectorId::FIN, SectorId::PUB,
};

constexpr std::size_t index_of(SectorId s) noexcept {
  return static_cast<std::size_t>(s);
}

std::string_view code(SectorId s);
std::string_view display_name(SectorId s);
std::optional<SectorId> sector_from_code(std::string_view token);

// A named, duplicate-free set of sectors with members kept in ascending
// code order (the summation order contract).
class SectorGroup {
public:
  SectorGroup(std::string name, std::vector<SectorId> members);

  const std::string& name() const noexcept { return name_; }
  const std::vector<SectorId>& members() const noexcept { return members_; }
  bool contains(SectorId s) const noexcept;

private:
  std::string name_;
  std::vector<SectorId> members_;
};

const SectorGroup& primary_group();    // AGR, MIN
const SectorGroup& secondary_group();  // MFG, UTL, CON
const SectorGroup& tertiary_group();   // TRD, FIN, PUB
const SectorGroup& total_group();      // all 8
SectorGroup singleton_group(SectorId s);

// Finds a built-in group by name (PRIMARY/SECONDARY/TERTIARY/TOTAL) or a
// sector by code; nullopt otherwise.
std::optional<SectorGroup> group_from_name(std::string_view token);

}  // namespace gvacast
