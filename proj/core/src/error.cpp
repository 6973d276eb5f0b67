#include "gnslab/error.hpp"

namespace gnslab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::Range: return "range error";
    case ErrorKind::Capacity: return "capacity error";
    case ErrorKind::Placement: return "placement error";
    case ErrorKind::UnsupportedAlphabet: return "unsupported alphabet";
    case ErrorKind::Data: return "data error";
    case ErrorKind::Size: return "size error";
    case ErrorKind::Coverage: return "coverage error";
    case ErrorKind::Shape: return "shape error";
    case ErrorKind::Io: return "i/o error";
  }
  return "error";
}

bool Error::is_input_error() const noexcept {
  switch (kind_) {
    case ErrorKind::Parse:
    case ErrorKind::Validation:
    case ErrorKind::Range:
    case ErrorKind::Capacity:
    case ErrorKind::Placement:
    case ErrorKind::UnsupportedAlphabet:
      return true;
    default:
      return false;
  }
}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, std::string(to_string(kind)) + ": " + message);
}

}  // namespace gnslab
