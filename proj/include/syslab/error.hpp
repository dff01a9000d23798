#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace syslab {

// Numeric values are shared with the C status codes in syslab.h.
enum class ErrorCode : int {
  Unreachable = 1,
  BoundaryUnsafe = 2,
  NotASimplex = 3,
  ConstructionFailed = 4,
  ConditionViolated = 5,
  EmptyLayer = 6,
  MalformedProfile = 7,
  NoRealizingChain = 8,
  NotFlat = 9,
  Timeout = 10,
  NoFilling = 11,
  NotASimplexOfDisk = 12,
  DegenerateDomain = 13,
  OutsideDomain = 14,
  NoCrossing = 15,
  NoSelection = 16,
  Inconclusive = 17,
  NotTranslationLike = 18,
  NoStableSegment = 19,
  ParseError = 20,
  TaskFailed = 21,
  NotPlaneBacked = 22,
  PreconditionViolated = 23,
  InvalidArgument = 24,
  IoError = 25,
  Overflow = 26,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace syslab
