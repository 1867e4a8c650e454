#include "srs/error.hpp"

namespace srs {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotInterior: return "NotInterior";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ZeroNormal: return "ZeroNormal";
    case ErrorKind::ShiftIncompatible: return "ShiftIncompatible";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::DegenerateHull: return "DegenerateHull";
    case ErrorKind::NonStationary: return "NonStationary";
    case ErrorKind::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorKind::NotAdjacent: return "NotAdjacent";
    case ErrorKind::NoCompatibleOrder: return "NoCompatibleOrder";
    case ErrorKind::InvalidIndex: return "InvalidIndex";
    case ErrorKind::UnboundedPolygon: return "UnboundedPolygon";
    case ErrorKind::EmptyWindow: return "EmptyWindow";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace srs
