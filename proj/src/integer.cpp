#include <colorlie/errors.hpp>
#include <colorlie/integer.hpp>

#include <cmath>
#include <numbers>

namespace colorlie {

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

double log_abs(const Integer& value) {
  if (value == 0) throw InvalidInput("log_abs of zero");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(std::abs(mantissa)) +
         static_cast<double>(exponent) * std::numbers::ln2;
}

std::optional<std::int64_t> to_int64(const Integer& value) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (!value.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(value.get_si());
}

}  // namespace colorlie
