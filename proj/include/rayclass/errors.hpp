#pragma once

#include <stdexcept>
#include <string>

namespace rayclass {

enum class ErrorKind {
  InvalidArgument,
  ImTooSmall,
  NearZero,
  DegenerateIndex,
  OnLattice,
  NotFundamental,
  NotImaginary,
  UnsupportedDiscriminant,
  NonInvertible,
  DuplicateValues,
};

const char* to_string(ErrorKind kind);

/// True for failures caused by the numerics rather than by bad input.
bool is_numerical(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rayclass
