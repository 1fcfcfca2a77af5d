#pragma once

#include <stdexcept>
#include <string>

namespace msw {

enum class ErrorCode {
  kInvalidArgument,
  kVariableMismatch,
  kNotDivisible,
  kResourceCap,
  kIllConditioned,
  kNoPeriodFound,
  kPatternViolation,
  kParse,
  kInternal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& w) : Error(ErrorCode::kInvalidArgument, w) {}
};

// Operands carry incompatible variable tags, e.g. a polynomial in c added to one in a.
struct VariableMismatch : Error {
  explicit VariableMismatch(const std::string& w) : Error(ErrorCode::kVariableMismatch, w) {}
};

// An exact division left a remainder. Every caller divides by something that is
// a theorem-level factor, so this always indicates a construction bug.
struct NotDivisible : Error {
  explicit NotDivisible(const std::string& w) : Error(ErrorCode::kNotDivisible, w) {}
};

struct ResourceCapExceeded : Error {
  explicit ResourceCapExceeded(const std::string& w) : Error(ErrorCode::kResourceCap, w) {}
};

struct IllConditioned : Error {
  explicit IllConditioned(const std::string& w) : Error(ErrorCode::kIllConditioned, w) {}
};

struct NoPeriodFound : Error {
  explicit NoPeriodFound(const std::string& w) : Error(ErrorCode::kNoPeriodFound, w) {}
};

struct PatternViolation : Error {
  explicit PatternViolation(const std::string& w) : Error(ErrorCode::kPatternViolation, w) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorCode::kParse, w) {}
};

}  // namespace msw
