#include "gvacast/fiscal.hpp"

#include "gvacast/errors.hpp"

namespace gvacast {

FiscalQuarter::FiscalQuarter(int fy_start, int quarter)
    : fy_start_(fy_start), quarter_(quarter) {
  if (quarter < 1 || quarter > 4)
    throw Error(ErrorKind::BadQuarter,
                "quarter must be 1..4, got " + std::to_string(quarter));
  if (fy_start < 2011 || fy_start > 9999)
    throw Error(ErrorKind::InvalidArgument,
                "fiscal year start must be a 4-digit year >= 2011, got " +
                    std::to_string(fy_start));
}

std::string FiscalQuarter::label() const {
  return std::to_string(fy_start_) + "Q" + std::to_string(quarter_);
}

}  // namespace gvacast
