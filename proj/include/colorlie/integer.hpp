#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace colorlie {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

Integer ipow(const Integer& base, unsigned long exponent);

/// Natural logarithm of |value|; value must be nonzero. Works past the
/// double range because the binary exponent is split off first.
double log_abs(const Integer& value);

std::optional<std::int64_t> to_int64(const Integer& value);

}  // namespace colorlie
