#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace haulplan {

enum class ErrorCode {
  InvalidArgument,
  NoPathExists,
  TargetInsideTurningCircle,
  StartTooClose,
  DegenerateCalibration,
  ScenarioInvalid,
  NotFound,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code. All planner and scenario
/// failures surface as this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace haulplan
