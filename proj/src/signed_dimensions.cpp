#include <colorlie/errors.hpp>
#include <colorlie/signed_dimensions.hpp>

#include <algorithm>

namespace colorlie {

SignedDimensionSequence::SignedDimensionSequence(std::vector<Integer> even_dims,
                                                 std::vector<Integer> odd_dims)
    : even_(std::move(even_dims)), odd_(std::move(odd_dims)) {
  if (even_.size() != odd_.size()) {
    throw InvalidInput("even and odd dimension lists differ in length");
  }
  const auto negative = [](const Integer& x) { return x < 0; };
  if (std::ranges::any_of(even_, negative) ||
      std::ranges::any_of(odd_, negative)) {
    throw InvalidInput("dimensions must be nonnegative");
  }
}

SignedDimensionSequence SignedDimensionSequence::padded(
    std::vector<Integer> even_dims, std::vector<Integer> odd_dims,
    std::size_t length) {
  if (even_dims.size() > length || odd_dims.size() > length) {
    throw InvalidInput("dimension list longer than the requested length");
  }
  even_dims.resize(length, Integer(0));
  odd_dims.resize(length, Integer(0));
  return {std::move(even_dims), std::move(odd_dims)};
}

bool SignedDimensionSequence::has_odd_part() const {
  return std::ranges::any_of(odd_, [](const Integer& x) { return x != 0; });
}

}  // namespace colorlie
