#include "hocofin/error.hpp"

namespace hocofin {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::MissingComposite: return "MissingComposite";
    case ErrorCode::AssociativityViolation: return "AssociativityViolation";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::InvalidComposite: return "InvalidComposite";
    case ErrorCode::DanglingId: return "DanglingId";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::UnknownMorphism: return "UnknownMorphism";
    case ErrorCode::FunctorViolation: return "FunctorViolation";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::NaturalityViolation: return "NaturalityViolation";
    case ErrorCode::SimplicialIdentityViolation:
      return "SimplicialIdentityViolation";
    case ErrorCode::LevelTooLow: return "LevelTooLow";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::GroupAxiomViolation: return "GroupAxiomViolation";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DegreeMissing: return "DegreeMissing";
    case ErrorCode::ComplexViolation: return "ComplexViolation";
    case ErrorCode::TruncationUnsound: return "TruncationUnsound";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotVDC: return "NotVDC";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::RouteMismatch: return "RouteMismatch";
  }
  return "Unknown";
}

}  // namespace hocofin
