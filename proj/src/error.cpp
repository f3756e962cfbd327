#include "topolab/error.hpp"

namespace topolab {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotATopology: return "NotATopology";
    case ErrorKind::PointOutOfRange: return "PointOutOfRange";
    case ErrorKind::CarrierOverflow: return "CarrierOverflow";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotContinuous: return "NotContinuous";
    case ErrorKind::NotDirected: return "NotDirected";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::RoleViolation: return "RoleViolation";
    case ErrorKind::NotOpen: return "NotOpen";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
    case ErrorKind::InvalidPreorder: return "InvalidPreorder";
    case ErrorKind::InvalidPoset: return "InvalidPoset";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Error";
}

}  // namespace topolab
