#include "gvacast/errors.hpp"

namespace gvacast {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownSector: return "UnknownSector";
    case ErrorKind::BadQuarter: return "BadQuarter";
    case ErrorKind::NonPositiveValue: return "NonPositiveValue";
    case ErrorKind::DuplicateKey: return "DuplicateKey";
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::MissingSector: return "MissingSector";
    case ErrorKind::ExtraRow: return "ExtraRow";
    case ErrorKind::FactorOutOfRange: return "FactorOutOfRange";
    case ErrorKind::GrowthOutOfRange: return "GrowthOutOfRange";
    case ErrorKind::MissingEntry: return "MissingEntry";
    case ErrorKind::ConflictingEntry: return "ConflictingEntry";
    case ErrorKind::PartialYear: return "PartialYear";
    case ErrorKind::NothingMissing: return "NothingMissing";
    case ErrorKind::MultipleMissing: return "MultipleMissing";
    case ErrorKind::NearZeroBase: return "NearZeroBase";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace gvacast
