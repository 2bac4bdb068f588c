#include "tauroot/error.hpp"

namespace tauroot {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DanglingArrow: return "DanglingArrow";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::DuplicateArrowRecord: return "DuplicateArrowRecord";
    case Errc::NonPositiveMult: return "NonPositiveMult";
    case Errc::NotABijection: return "NotABijection";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::CyclicGenerator: return "CyclicGenerator";
    case Errc::BadRange: return "BadRange";
    case Errc::ArrowNotPreserved: return "ArrowNotPreserved";
    case Errc::SigmaNotBijective: return "SigmaNotBijective";
    case Errc::MarginTooSmall: return "MarginTooSmall";
    case Errc::NotARoot: return "NotARoot";
    case Errc::BadPartition: return "BadPartition";
    case Errc::NormalFormViolated: return "NormalFormViolated";
    case Errc::NotSL: return "NotSL";
    case Errc::VertexNotKept: return "VertexNotKept";
    case Errc::NotHereditary: return "NotHereditary";
    case Errc::NotSemisimple: return "NotSemisimple";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::BadRemovedSet: return "BadRemovedSet";
    case Errc::SymmetryViolated: return "SymmetryViolated";
    case Errc::MissingB: return "MissingB";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace tauroot
