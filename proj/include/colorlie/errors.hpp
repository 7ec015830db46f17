#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace colorlie {

enum class ErrorKind {
  invalid_input,
  not_an_euler_transform,
  unsupported_parity,
  invalid_characteristic,
  invalid_bicharacter,
  too_large,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Base of every error raised by the library. The kind is what callers
// (the CLI in particular) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& message)
      : Error(ErrorKind::invalid_input, message) {}
};

class NotAnEulerTransform : public Error {
 public:
  explicit NotAnEulerTransform(const std::string& message)
      : Error(ErrorKind::not_an_euler_transform, message) {}
};

class UnsupportedParity : public Error {
 public:
  explicit UnsupportedParity(const std::string& message)
      : Error(ErrorKind::unsupported_parity, message) {}
};

class InvalidCharacteristic : public Error {
 public:
  explicit InvalidCharacteristic(const std::string& message)
      : Error(ErrorKind::invalid_characteristic, message) {}
};

class InvalidBicharacter : public Error {
 public:
  explicit InvalidBicharacter(const std::string& message)
      : Error(ErrorKind::invalid_bicharacter, message) {}
};

class TooLarge : public Error {
 public:
  explicit TooLarge(const std::string& message)
      : Error(ErrorKind::too_large, message) {}
};

}  // namespace colorlie
