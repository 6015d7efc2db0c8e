#include "orbikit/error.hpp"

namespace orbikit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::InvalidLocalDegree: return "InvalidLocalDegree";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::DanglingImage: return "DanglingImage";
    case ErrorCode::NotForwardClosed: return "NotForwardClosed";
    case ErrorCode::RiemannHurwitzViolation: return "RiemannHurwitzViolation";
    case ErrorCode::FiberOverflow: return "FiberOverflow";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NotNonHyperbolic: return "NotNonHyperbolic";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::UnknownCase: return "UnknownCase";
    case ErrorCode::NotFullCover: return "NotFullCover";
    case ErrorCode::IllegalAssignment: return "IllegalAssignment";
    case ErrorCode::NotTorusCase: return "NotTorusCase";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::AssertionFailure: return "AssertionFailure";
    case ErrorCode::DegenerateIterate: return "DegenerateIterate";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::AllSingular: return "AllSingular";
    case ErrorCode::EnumerationCapExceeded: return "EnumerationCapExceeded";
  }
  return "Unknown";
}

}  // namespace orbikit
