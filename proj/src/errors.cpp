#include <colorlie/errors.hpp>

namespace colorlie {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_input:
      return "InvalidInput";
    case ErrorKind::not_an_euler_transform:
      return "NotAnEulerTransform";
    case ErrorKind::unsupported_parity:
      return "UnsupportedParity";
    case ErrorKind::invalid_characteristic:
      return "InvalidCharacteristic";
    case ErrorKind::invalid_bicharacter:
      return "InvalidBicharacter";
    case ErrorKind::too_large:
      return "TooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace colorlie
