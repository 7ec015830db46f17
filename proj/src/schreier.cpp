#include <colorlie/errors.hpp>
#include <colorlie/schreier.hpp>

namespace colorlie {

Integer group_schreier_rank(const Integer& rank, const Integer& index) {
  if (rank < 1 || index < 1) {
    throw InvalidInput("group_schreier_rank: rank and index must be >= 1");
  }
  return (rank - 1) * index + 1;
}

TruncatedSeries lie_schreier_series(const TruncatedSeries& generators,
                                    const TruncatedSeries& quotient) {
  if (!generators.has_zero_constant_term()) {
    throw InvalidInput("lie_schreier_series: H(X) must have zero constant term");
  }
  if (!quotient.has_zero_constant_term()) {
    throw InvalidInput("lie_schreier_series: H(L/K) must have zero constant term");
  }
  if (!quotient.is_nonnegative()) {
    throw InvalidInput("lie_schreier_series: H(L/K) must be nonnegative");
  }
  const std::size_t order = std::min(generators.order(), quotient.order());
  const TruncatedSeries one = TruncatedSeries::one(order);
  return (generators - one) * euler_transform(quotient) + one;
}

Integer color_schreier_rank(const Integer& rank_l, unsigned long odd_codim) {
  if (rank_l < 1) throw InvalidInput("color_schreier_rank: rank must be >= 1");
  return ipow(Integer(2), odd_codim) * (rank_l - 1) + 1;
}

}  // namespace colorlie
