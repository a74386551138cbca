#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slu {

enum class ErrorKind {
  NotPrime,
  TooLarge,
  DivisionByZero,
  NotSquareOrder,
  EvenOrder,
  BadMode,
  BadBlockSize,
  AxiomViolation,
  InvalidParallelism,
  Timeout,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exception carrying a machine-readable kind next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace slu
