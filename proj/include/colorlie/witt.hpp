#pragma once

#include <colorlie/alphabet.hpp>
#include <colorlie/integer.hpp>
#include <colorlie/number_theory.hpp>
#include <colorlie/series.hpp>

#include <cstddef>

namespace colorlie {

/// Dimension of the degree-n component of the free Lie algebra of rank r:
/// (1/n) sum_{d | n} mu(d) r^(n/d). Requires n >= 1.
Integer witt_dim(unsigned long r, unsigned long n);

/// Total dimension of the degree-n component of the free color Lie
/// superalgebra on r even and s odd weight-1 generators:
/// (1/n) sum_{m | n} mu(m) (r - (-1)^m s)^(n/m). Requires r + s >= 1, n >= 1.
Integer color_witt_dim(unsigned long r, unsigned long s, unsigned long n);

/// sum_{n=1..N} witt_dim(r, n) t^n.
TruncatedSeries witt_series(unsigned long r, std::size_t order);

/// sum_{n=1..N} color_witt_dim(r, s, n) t^n.
TruncatedSeries color_witt_series(unsigned long r, unsigned long s,
                                  std::size_t order);

/// H(X, t) = sum_i |X_i| t^i.
TruncatedSeries alphabet_series(const GradedAlphabet& alphabet,
                                std::size_t order);

/// Weight-graded Hilbert series of the free Lie algebra on an even alphabet
/// whose generating function is `generator_series`:
/// inverse_euler_transform(1 / (1 - H(X))).
TruncatedSeries free_lie_series(const TruncatedSeries& generator_series);

/// As above from an alphabet. Throws UnsupportedParity if any generator
/// is odd: no weighted super formula is provided.
TruncatedSeries free_lie_series_from_alphabet(const GradedAlphabet& alphabet,
                                              std::size_t order);

}  // namespace colorlie
