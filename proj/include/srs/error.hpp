#pragma once

#include <stdexcept>
#include <string>

namespace srs {

enum class ErrorKind {
  DimensionMismatch,
  CapExceeded,
  NotInterior,
  ResourceLimit,
  Overflow,
  ZeroNormal,
  ShiftIncompatible,
  Unbounded,
  Empty,
  DegenerateHull,
  NonStationary,
  DimensionUnsupported,
  NotAdjacent,
  NoCompatibleOrder,
  InvalidIndex,
  UnboundedPolygon,
  EmptyWindow,
  Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace srs
