#pragma once

#include <colorlie/bicharacter.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace colorlie {

struct Generator {
  std::string label;
  unsigned weight = 1;
  GroupElement degree;
};

/// Finitely graded generating set X: every generator carries a weight
/// (its N-degree) and a degree in the grading group of the attached
/// bicharacter. Parity is derived: x is even iff gamma(d(x), d(x)) = 1.
class GradedAlphabet {
 public:
  /// Throws InvalidInput for weight 0, duplicate labels or a degree
  /// outside the group.
  GradedAlphabet(BicharacterTable table, std::vector<Generator> generators);

  /// r even and s odd weight-1 letters x1..xr, y1..ys over Z_2 with
  /// gamma(i,j) = (-1)^(ij). With s = 1 the odd letter is just "y".
  static GradedAlphabet free_superalgebra(unsigned even, unsigned odd);

  /// Even letters of the given weights over the trivial group.
  static GradedAlphabet even_weighted(std::span<const unsigned> weights);

  const BicharacterTable& table() const noexcept { return table_; }
  std::span<const Generator> generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }

  const Generator& operator[](std::size_t i) const { return generators_.at(i); }
  std::size_t degree_index(std::size_t i) const { return degree_index_.at(i); }
  bool is_even(std::size_t i) const {
    return table_.is_even(degree_index_.at(i));
  }

  std::size_t even_count() const;
  std::size_t odd_count() const;
  bool all_even() const { return odd_count() == 0; }

 private:
  BicharacterTable table_;
  std::vector<Generator> generators_;
  std::vector<std::size_t> degree_index_;
};

}  // namespace colorlie
