#pragma once

#include <cstdint>
#include <vector>

namespace colorlie {

/// Möbius function: 0 when n has a square prime factor, otherwise
/// (-1)^(number of prime factors). Throws InvalidInput for n = 0.
int moebius(std::uint64_t n);

/// Positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

bool is_prime(std::uint64_t n);

}  // namespace colorlie
