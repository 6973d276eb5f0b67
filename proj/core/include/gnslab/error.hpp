#pragma once

#include <stdexcept>
#include <string>

namespace gnslab {

/// Failure categories. The CLI maps the first group to exit status 1
/// (bad input or configuration) and the rest to exit status 2.
enum class ErrorKind {
  Parse,
  Validation,
  Range,
  Capacity,
  Placement,
  UnsupportedAlphabet,
  Data,
  Size,
  Coverage,
  Shape,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for errors caused by user-supplied input or configuration.
  bool is_input_error() const noexcept;

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace gnslab
