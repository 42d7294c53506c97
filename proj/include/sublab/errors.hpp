#pragma once

#include <stdexcept>
#include <string>

namespace sublab {

struct DegreeError : std::runtime_error {
  explicit DegreeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

struct MembershipError : std::runtime_error {
  explicit MembershipError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NormalityError : std::runtime_error {
  explicit NormalityError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ArgumentError : std::runtime_error {
  explicit ArgumentError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sublab
