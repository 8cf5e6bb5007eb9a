#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bgrank {

enum class ErrorKind {
  // Malformed text or structurally invalid values.
  Parse,
  InvalidPartition,
  NotStrict,
  // (a,b)-sequences and column profiles.
  NotABSequence,
  NoSplit,
  AmbiguousSplit,
  // Double cover.
  CoverOverflow,
  CoverUnderflow,
  IncompleteCover,
  NotAPartitionShape,
  NotInImage,
  // Composed maps.
  NotInIotaImage,
  NotTriangular,
  NotRepresentable,
  RankMismatch,
  LargestPartExceedsBound,
  BoundViolation,
  ParameterMismatch,
  Inconsistent,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bgrank
