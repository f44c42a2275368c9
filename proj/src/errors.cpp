#include "rayclass/errors.hpp"

namespace rayclass {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ImTooSmall: return "ImTooSmall";
    case ErrorKind::NearZero: return "NearZero";
    case ErrorKind::DegenerateIndex: return "DegenerateIndex";
    case ErrorKind::OnLattice: return "OnLattice";
    case ErrorKind::NotFundamental: return "NotFundamental";
    case ErrorKind::NotImaginary: return "NotImaginary";
    case ErrorKind::UnsupportedDiscriminant: return "UnsupportedDiscriminant";
    case ErrorKind::NonInvertible: return "NonInvertible";
    case ErrorKind::DuplicateValues: return "DuplicateValues";
  }
  return "Unknown";
}

bool is_numerical(ErrorKind kind) {
  return kind == ErrorKind::ImTooSmall || kind == ErrorKind::NearZero || kind == ErrorKind::DuplicateValues;
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace rayclass
