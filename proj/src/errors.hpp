#pragma once

#include <stdexcept>
#include <string>

namespace kepot {

// Failure categories surfaced through the C API as status codes.
enum class Err {
  PoleAtBoundary,    // evaluation at a pole of a rational map
  OutsideDomain,     // point not in the model domain
  SingularJacobian,  // non-invertible derivative where one is required
  NotConstantNorm,   // potential whose differential norm is not constant
  NotPolynomial,     // sampled field does not fit a polynomial of the degree cap
  NotGraded,         // field is not an eigenvector of ad_D
  DegreeOverflow,    // bracket left the degree-2 coefficient space
  NotInAlgebra,      // field is not a real combination of the basis
  SingularSystem,    // shift system has no unique solution
  UnsupportedTag,    // no closed-form flow for this basis tag
  Degenerate,        // degenerate geometric configuration
  InvalidConfig,     // malformed configuration or input document
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code(code) {}
  Err code;
};

}  // namespace kepot
