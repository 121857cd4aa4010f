#include "stabcov/error.hpp"

namespace stabcov {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::OnWall: return "OnWall";
    case ErrorCode::OutOfSector: return "OutOfSector";
    case ErrorCode::ForbiddenStratum: return "ForbiddenStratum";
    case ErrorCode::PathHitsForbidden: return "PathHitsForbidden";
    case ErrorCode::NonGenericCrossing: return "NonGenericCrossing";
    case ErrorCode::StartNotGeneric: return "StartNotGeneric";
    case ErrorCode::NotEncirclable: return "NotEncirclable";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::NotALoop: return "NotALoop";
    case ErrorCode::UnsupportedSlice: return "UnsupportedSlice";
  }
  return "UnknownError";
}

}  // namespace stabcov
