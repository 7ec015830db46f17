#include <colorlie/envelope.hpp>
#include <colorlie/errors.hpp>
#include <colorlie/number_theory.hpp>

namespace colorlie {

TruncatedSeries enveloping_series(const SignedDimensionSequence& dims) {
  return super_euler_transform(dims);
}

TruncatedSeries restricted_enveloping_series(const SignedDimensionSequence& dims,
                                             std::uint64_t p,
                                             RestrictedOptions options) {
  if (!is_prime(p)) {
    throw InvalidInput(std::to_string(p) + " is not prime");
  }
  if (options.trivial_grading && dims.has_odd_part()) {
    throw InvalidInput("a trivially graded algebra has no odd part");
  }
  if (p < 5 && !options.trivial_grading && !options.override_characteristic) {
    throw InvalidCharacteristic(
        "characteristic " + std::to_string(p) +
        " is excluded for color gradings; need p >= 5");
  }
  return restricted_euler_transform(dims, p);
}

TruncatedSeries direct_sum_series(const TruncatedSeries& f,
                                  const TruncatedSeries& g) {
  return series_add(f, g);
}

TruncatedSeries tensor_series(const TruncatedSeries& f,
                              const TruncatedSeries& g) {
  return series_mul(f, g);
}

}  // namespace colorlie
