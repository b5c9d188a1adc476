#include "binlcm/error.hpp"

namespace binlcm {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroOperand: return "ZeroOperand";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ZeroValue: return "ZeroValue";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace binlcm
