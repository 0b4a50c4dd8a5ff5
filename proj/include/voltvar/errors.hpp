#pragma once

#include <stdexcept>
#include <string>

namespace voltvar {

/// Failure categories, mirrored one-to-one by the C API status codes.
enum class ErrorKind {
  invalid_argument,
  io,
  config,
  numeric,
  infeasible,
  not_converged,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_error(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace voltvar
