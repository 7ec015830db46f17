#pragma once

#include <colorlie/series.hpp>
#include <colorlie/signed_dimensions.hpp>

#include <cstdint>

namespace colorlie {

/// Hilbert series of U(L) = U(L_+) (x) Lambda(L_-) for a graded color Lie
/// superalgebra with even dimensions a_n and odd dimensions b_n.
TruncatedSeries enveloping_series(const SignedDimensionSequence& dims);

struct RestrictedOptions {
  /// The grading group is {1}; any prime characteristic is admissible.
  bool trivial_grading = false;
  /// Lift the p >= 5 requirement regardless of the grading.
  bool override_characteristic = false;
};

/// Hilbert series of the restricted enveloping algebra u(L): even PBW
/// exponents are capped at p - 1, odd ones at 1.
///
/// Throws InvalidInput if p is not prime or if trivial_grading is claimed
/// with a nonzero odd part, and InvalidCharacteristic for p < 5 with a
/// nontrivial grading unless override_characteristic is set.
TruncatedSeries restricted_enveloping_series(const SignedDimensionSequence& dims,
                                             std::uint64_t p,
                                             RestrictedOptions options = {});

/// H(U (+) V) for filtered spaces, (U (+) V)^n = U^n (+) V^n.
TruncatedSeries direct_sum_series(const TruncatedSeries& f,
                                  const TruncatedSeries& g);

/// H(U (x) V) for filtered spaces, (U (x) V)^n = sum_i U^i (x) V^(n-i).
TruncatedSeries tensor_series(const TruncatedSeries& f,
                              const TruncatedSeries& g);

}  // namespace colorlie
