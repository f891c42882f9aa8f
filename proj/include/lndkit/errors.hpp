#ifndef LNDKIT_ERRORS_HPP
#define LNDKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lnd {

// Every failure carries a stable class code; reports and exit codes key off it.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Exit code 2: bad input shape (CLI usage, file syntax).
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& msg) : Error("UsageError", msg) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error("ParseError", msg + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Exit code 1: a mathematical verdict, not a malfunction.
class MathError : public Error {
 public:
  using Error::Error;
};

// Exit code 3: an internal consistency check tripped; never expected on valid input.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& msg) : Error("InternalError", msg) {}
};

class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& msg)
      : Error("InvariantViolation", msg) {}
};

#define LNDKIT_MATH_ERROR(NAME)                                   \
  class NAME : public MathError {                                 \
   public:                                                        \
    explicit NAME(const std::string& msg) : MathError(#NAME, msg) {} \
  }

LNDKIT_MATH_ERROR(VariableMismatch);
LNDKIT_MATH_ERROR(DivisionByZero);
LNDKIT_MATH_ERROR(ZeroPolynomial);
LNDKIT_MATH_ERROR(NotWellDefined);
LNDKIT_MATH_ERROR(NotCommuting);
LNDKIT_MATH_ERROR(NotIndependent);
LNDKIT_MATH_ERROR(NotLocallyNilpotent);
LNDKIT_MATH_ERROR(CapExceeded);
LNDKIT_MATH_ERROR(NotInKernel);
LNDKIT_MATH_ERROR(NotInJointKernel);
LNDKIT_MATH_ERROR(AlreadyInKernel);
LNDKIT_MATH_ERROR(NotExpressible);
LNDKIT_MATH_ERROR(SolveInFFailed);
LNDKIT_MATH_ERROR(NonConstantQ);
LNDKIT_MATH_ERROR(NoSeedFound);
LNDKIT_MATH_ERROR(NotDerivation);
LNDKIT_MATH_ERROR(DeclarationError);
LNDKIT_MATH_ERROR(DivisionNotIntegral);

#undef LNDKIT_MATH_ERROR

// DegenerateFiber carries the offending pre-slice indices (1-based).
class DegenerateFiber : public MathError {
 public:
  DegenerateFiber(const std::string& msg, std::vector<std::size_t> indices)
      : MathError("DegenerateFiber", msg), indices_(std::move(indices)) {}
  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  std::vector<std::size_t> indices_;
};

}  // namespace lnd

#endif  // LNDKIT_ERRORS_HPP
