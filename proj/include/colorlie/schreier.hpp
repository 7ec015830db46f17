#pragma once

#include <colorlie/integer.hpp>
#include <colorlie/series.hpp>

namespace colorlie {

/// Rank of an index-`index` subgroup of the free group of rank n:
/// (n - 1) index + 1.
Integer group_schreier_rank(const Integer& rank, const Integer& index);

/// Generating function of a free generating set Z of a subalgebra K of the
/// free Lie algebra L(X):  H(Z) = (H(X) - 1) E(H(L/K)) + 1.
/// Both inputs need zero constant terms; H(L/K) must be nonnegative.
TruncatedSeries lie_schreier_series(const TruncatedSeries& generators,
                                    const TruncatedSeries& quotient);

/// 2^odd_codim (rank_L - 1) + 1, where odd_codim = dim (L/K)_-.
Integer color_schreier_rank(const Integer& rank_l, unsigned long odd_codim);

}  // namespace colorlie
