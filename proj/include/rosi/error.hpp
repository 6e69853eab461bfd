#ifndef ROSI_ERROR_HPP
#define ROSI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rosi {

enum class Err {
  DegreeMismatch,
  OrderBoundExceeded,
  NotASubgroup,
  NotNormal,
  UnknownBuiltin,
  FamilyNotClosed,
  NonIntegralInnerProduct,
  RankMismatch,
  FusionViolation,
  MaximalNotUnique,
  RankTooLarge,
  Infeasible,
  NotSubconjugate,
  BoundaryNotSquareZero,
  NotInjective,
  ParseError
};

struct Error : std::runtime_error {
  Err kind;
  Error(Err k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

const char* err_name(Err k);

} // namespace rosi

#endif
