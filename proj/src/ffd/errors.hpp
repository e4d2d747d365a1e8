#pragma once
// Error taxonomy shared by all modules.  Every failure the library can raise
// carries one of these codes so the C surface can translate exceptions into
// stable status values.

#include <stdexcept>
#include <string>

namespace ffd {

enum class Errc {
  kNotPrime,
  kSizeExceeded,
  kDivisionByZero,
  kFieldMismatch,
  kConstantPolynomial,
  kZeroPolynomial,
  kArityMismatch,
  kRingMismatch,
  kHypothesisViolated,
  kNonChevalleyForm,
  kZeroCoefficient,
  kZeroVector,
  kBudgetExceeded,
  kParseError,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace ffd
