#include "rosi/error.hpp"

namespace rosi {

const char* err_name(Err k) {
  switch (k) {
    case Err::DegreeMismatch: return "DegreeMismatch";
    case Err::OrderBoundExceeded: return "OrderBoundExceeded";
    case Err::NotASubgroup: return "NotASubgroup";
    case Err::NotNormal: return "NotNormal";
    case Err::UnknownBuiltin: return "UnknownBuiltin";
    case Err::FamilyNotClosed: return "FamilyNotClosed";
    case Err::NonIntegralInnerProduct: return "NonIntegralInnerProduct";
    case Err::RankMismatch: return "RankMismatch";
    case Err::FusionViolation: return "FusionViolation";
    case Err::MaximalNotUnique: return "MaximalNotUnique";
    case Err::RankTooLarge: return "RankTooLarge";
    case Err::Infeasible: return "Infeasible";
    case Err::NotSubconjugate: return "NotSubconjugate";
    case Err::BoundaryNotSquareZero: return "BoundaryNotSquareZero";
    case Err::NotInjective: return "NotInjective";
    case Err::ParseError: return "ParseError";
  }
  return "Unknown";
}

} // namespace rosi
