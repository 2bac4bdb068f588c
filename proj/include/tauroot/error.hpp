#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tauroot {

/// Domain error codes. Every operation that can fail throws tauroot::Error
/// carrying one of these.
enum class Errc {
  DanglingArrow,
  DuplicateVertex,
  DuplicateArrowRecord,
  NonPositiveMult,
  NotABijection,
  ParseError,
  SchemaError,
  CyclicGenerator,
  BadRange,
  ArrowNotPreserved,
  SigmaNotBijective,
  MarginTooSmall,
  NotARoot,
  BadPartition,
  NormalFormViolated,
  NotSL,
  VertexNotKept,
  NotHereditary,
  NotSemisimple,
  WrongDimension,
  BadRemovedSet,
  SymmetryViolated,
  MissingB,
  UnknownVertex,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tauroot
