#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gvacast {

// Every failure mode the library reports. The token name (see to_string)
// is embedded at the front of Error::what(), so callers and tests can
// match on it without parsing prose.
enum class ErrorKind {
  UnknownSector,
  BadQuarter,
  NonPositiveValue,
  DuplicateKey,
  MalformedRow,
  MissingSector,
  ExtraRow,
  FactorOutOfRange,
  GrowthOutOfRange,
  MissingEntry,
  ConflictingEntry,
  PartialYear,
  NothingMissing,
  MultipleMissing,
  NearZeroBase,
  InvalidArgument,
  IoError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace gvacast
