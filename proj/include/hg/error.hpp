#ifndef HG_ERROR_HPP
#define HG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hg {

enum class ErrorCode {
  NotMonic,
  DegreeZero,
  ReduciblePoly,
  FieldMismatch,
  DivideByZero,
  ZeroElement,
  RamifiedUnsupported,
  PrecisionExhausted,
  BudgetExceeded,
  BudgetExceededNoUpper,
  OptimizerStalled,
  NotUnimodular,
  NotTriangular,
  NotSquarefree,
  OneIsRoot,
  IndexExceeded,
  NotFoundUpToN,
  FactorizationUnsupported,
  Usage,
};

const char* to_string(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hg

#endif
