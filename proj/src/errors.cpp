#include "haulplan/errors.hpp"

namespace haulplan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return "InvalidArgument";
    case ErrorCode::NoPathExists:
      return "NoPathExists";
    case ErrorCode::TargetInsideTurningCircle:
      return "TargetInsideTurningCircle";
    case ErrorCode::StartTooClose:
      return "StartTooClose";
    case ErrorCode::DegenerateCalibration:
      return "DegenerateCalibration";
    case ErrorCode::ScenarioInvalid:
      return "ScenarioInvalid";
    case ErrorCode::NotFound:
      return "NotFound";
  }
  return "Unknown";
}

}  // namespace haulplan
