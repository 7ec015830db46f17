#pragma once

#include <colorlie/free_algebra.hpp>
#include <colorlie/integer.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace colorlie {

/// Incremental row echelon form over Q for elements of A<X>.
///
/// Each inserted element is scaled to a primitive integer row (denominators
/// cleared, content removed) and reduced fraction-free against the stored
/// pivot rows: row <- a*row - b*pivot with a, b the two leading entries
/// divided by their gcd. Only integer arithmetic is used after the initial
/// scaling, so the rank is exact.
class EchelonBasis {
 public:
  /// Returns true iff v is not in the span of the elements inserted so far
  /// (in which case the rank grows by one).
  bool insert(const FreeAlgebraElement& v);

  bool contains(const FreeAlgebraElement& v) const;

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  using Row = std::vector<std::pair<std::uint32_t, Integer>>;

  // Column ids are assigned on first sight; unknown words make `known`
  // false when `assign` is off.
  Row to_row(const FreeAlgebraElement& v, bool assign, bool& known);
  Row to_row_const(const FreeAlgebraElement& v, bool& known) const;
  void reduce(Row& row) const;

  std::map<Word, std::uint32_t> columns_;
  std::unordered_map<std::uint32_t, Row> pivots_;
};

/// Dimension over Q of the span of the given elements.
std::size_t rational_rank(std::span<const FreeAlgebraElement> elements);

}  // namespace colorlie
