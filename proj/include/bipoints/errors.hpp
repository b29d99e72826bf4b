#pragma once

#include <stdexcept>
#include <string>

namespace bipoints {

struct ZeroPoint : std::runtime_error {
  ZeroPoint() : std::runtime_error("ZeroPoint: both homogeneous coordinates are zero") {}
};

struct DuplicatePoint : std::runtime_error {
  explicit DuplicatePoint(const std::string& which)
      : std::runtime_error("DuplicatePoint: " + which) {}
};

struct PointNotInSet : std::runtime_error {
  PointNotInSet() : std::runtime_error("PointNotInSet: point is not a member of the set") {}
};

struct NoSeparator : std::runtime_error {
  explicit NoSeparator(const std::string& what_arg)
      : std::runtime_error("NoSeparator: " + what_arg) {}
};

struct NotAcm : std::runtime_error {
  explicit NotAcm(const std::string& what_arg) : std::runtime_error("NotAcm: " + what_arg) {}
};

struct LimitExceeded : std::runtime_error {
  explicit LimitExceeded(const std::string& what_arg)
      : std::runtime_error("LimitExceeded: " + what_arg) {}
};

struct TooManyPoints : std::runtime_error {
  TooManyPoints() : std::runtime_error("TooManyPoints: requested more points than grid cells") {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what_arg) : std::runtime_error("ParseError: " + what_arg) {}
};

struct IndexOutOfRange : std::runtime_error {
  IndexOutOfRange() : std::runtime_error("IndexOutOfRange: point index out of range") {}
};

struct BadField : std::runtime_error {
  explicit BadField(const std::string& what_arg) : std::runtime_error("BadField: " + what_arg) {}
};

}  // namespace bipoints
