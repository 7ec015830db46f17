#pragma once

#include <colorlie/integer.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace colorlie {

/// Degreewise dimensions of the even and odd parts of a graded color Lie
/// superalgebra, for degrees n = 1..N. Both lists have length N and all
/// entries are nonnegative.
class SignedDimensionSequence {
 public:
  SignedDimensionSequence(std::vector<Integer> even_dims,
                          std::vector<Integer> odd_dims);

  /// Pads both lists with zeros up to length N (lists longer than N are
  /// rejected).
  static SignedDimensionSequence padded(std::vector<Integer> even_dims,
                                        std::vector<Integer> odd_dims,
                                        std::size_t length);

  std::size_t size() const noexcept { return even_.size(); }

  /// Dimension of the even part in degree n, 1 <= n <= size().
  const Integer& even(std::size_t n) const { return even_.at(n - 1); }
  const Integer& odd(std::size_t n) const { return odd_.at(n - 1); }

  std::span<const Integer> even_dims() const noexcept { return even_; }
  std::span<const Integer> odd_dims() const noexcept { return odd_; }

  bool has_odd_part() const;

  bool operator==(const SignedDimensionSequence&) const = default;

 private:
  std::vector<Integer> even_;
  std::vector<Integer> odd_;
};

}  // namespace colorlie
