#pragma once

#include <colorlie/integer.hpp>
#include <colorlie/signed_dimensions.hpp>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace colorlie {

/// Formal power series sum c_k t^k with integer coefficients, reduced
/// modulo t^(N+1). Exactly N+1 coefficients are stored, so the truncation
/// order travels with the value. Binary operations return a result of the
/// smaller of the two orders.
class TruncatedSeries {
 public:
  /// The zero series of order N.
  explicit TruncatedSeries(std::size_t order);

  /// Coefficients c_0, c_1, ...; missing terms are zero and terms past
  /// t^order are dropped.
  TruncatedSeries(std::vector<Integer> coefficients, std::size_t order);

  static TruncatedSeries from_ints(std::initializer_list<long> coefficients,
                                   std::size_t order);
  static TruncatedSeries one(std::size_t order);
  static TruncatedSeries monomial(const Integer& coefficient,
                                  std::size_t degree, std::size_t order);

  std::size_t order() const noexcept { return coefficients_.size() - 1; }

  const Integer& operator[](std::size_t k) const { return coefficients_.at(k); }
  Integer& operator[](std::size_t k) { return coefficients_.at(k); }

  std::span<const Integer> coefficients() const noexcept {
    return coefficients_;
  }

  /// Reduction to a smaller order. Throws InvalidInput if order grows.
  TruncatedSeries truncated(std::size_t order) const;

  bool has_zero_constant_term() const { return coefficients_.front() == 0; }
  bool is_nonnegative() const;

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<Integer> coefficients_;
};

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator-(const TruncatedSeries& f);
TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator*(const Integer& c, const TruncatedSeries& f);

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f);

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// 1/(1 - f). Requires f(0) = 0.
TruncatedSeries geom_inverse(const TruncatedSeries& f);

/// Euler transform  sum a_i t^i  ->  prod_i (1 - t^i)^(-a_i).
/// Requires a_0 = 0; the a_i may be negative.
TruncatedSeries euler_transform(const TruncatedSeries& f);

/// Inverse of euler_transform. Requires f(0) = 1. The result has a zero
/// constant term. Throws NotAnEulerTransform if a Möbius-inverted power
/// sum fails to divide exactly.
TruncatedSeries inverse_euler_transform(const TruncatedSeries& f);

/// prod_n (1 - t^n)^(-a_n) (1 + t^n)^(b_n), truncated at the length of the
/// sequence.
TruncatedSeries super_euler_transform(const SignedDimensionSequence& dims);

/// prod_n ((1 - t^(pn)) / (1 - t^n))^(a_n) (1 + t^n)^(b_n). p must be prime.
TruncatedSeries restricted_euler_transform(const SignedDimensionSequence& dims,
                                           std::uint64_t p);

}  // namespace colorlie
