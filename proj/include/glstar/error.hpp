#pragma once

#include <stdexcept>
#include <string>

namespace glstar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GLSTAR_DEFINE_ERROR(Name)              \
  class Name : public Error {                  \
   public:                                     \
    explicit Name(const std::string& what)     \
        : Error(#Name ": " + what) {}          \
  };

GLSTAR_DEFINE_ERROR(InvalidInput)
GLSTAR_DEFINE_ERROR(DegenerateJoin)
GLSTAR_DEFINE_ERROR(NotOnQuadric)
GLSTAR_DEFINE_ERROR(SingularForm)
GLSTAR_DEFINE_ERROR(NotTwoSecant)
GLSTAR_DEFINE_ERROR(EvalError)
GLSTAR_DEFINE_ERROR(InvalidCenter)
GLSTAR_DEFINE_ERROR(NotZeroSecant)
GLSTAR_DEFINE_ERROR(DegenerateMeet)
GLSTAR_DEFINE_ERROR(SearchFailed)
GLSTAR_DEFINE_ERROR(HfdViolation)
GLSTAR_DEFINE_ERROR(ParseError)
GLSTAR_DEFINE_ERROR(ConfigError)
GLSTAR_DEFINE_ERROR(IOError)

#undef GLSTAR_DEFINE_ERROR

/// A construction hypothesis failed; `condition` names it and `witness`
/// is the parameter value where it was observed.
class ConditionFailed : public Error {
 public:
  ConditionFailed(std::string condition, double witness, const std::string& detail = {})
      : Error("ConditionFailed: " + condition + " at " + std::to_string(witness) +
              (detail.empty() ? std::string() : " (" + detail + ")")),
        condition_(std::move(condition)),
        witness_(witness) {}

  const std::string& condition() const noexcept { return condition_; }
  double witness() const noexcept { return witness_; }

 private:
  std::string condition_;
  double witness_;
};

}  // namespace glstar
