#include <colorlie/errors.hpp>
#include <colorlie/witt.hpp>

#include <stdexcept>

namespace colorlie {

namespace {

Integer divide_by_degree(const Integer& sum, unsigned long n) {
  if (!mpz_divisible_ui_p(sum.get_mpz_t(), n)) {
    throw std::logic_error("divisor sum " + sum.get_str() +
                           " not divisible by " + std::to_string(n));
  }
  Integer q;
  mpz_divexact_ui(q.get_mpz_t(), sum.get_mpz_t(), n);
  return q;
}

}  // namespace

Integer witt_dim(unsigned long r, unsigned long n) {
  if (n == 0) throw InvalidInput("witt_dim: degree must be at least 1");
  Integer sum = 0;
  for (std::uint64_t d : divisors(n)) {
    const int mu = moebius(d);
    if (mu == 0) continue;
    const Integer term = ipow(Integer(r), n / d);
    if (mu > 0) sum += term;
    else sum -= term;
  }
  return divide_by_degree(sum, n);
}

Integer color_witt_dim(unsigned long r, unsigned long s, unsigned long n) {
  if (n == 0) throw InvalidInput("color_witt_dim: degree must be at least 1");
  if (r + s == 0) throw InvalidInput("color_witt_dim: need r + s >= 1");
  Integer sum = 0;
  for (std::uint64_t m : divisors(n)) {
    const int mu = moebius(m);
    if (mu == 0) continue;
    // r - (-1)^m s
    const Integer base = (m % 2 == 0) ? Integer(Integer(r) - s) : Integer(Integer(r) + s);
    const Integer term = ipow(base, n / m);
    if (mu > 0) sum += term;
    else sum -= term;
  }
  return divide_by_degree(sum, n);
}

TruncatedSeries witt_series(unsigned long r, std::size_t order) {
  TruncatedSeries f(order);
  for (std::size_t n = 1; n <= order; ++n) f[n] = witt_dim(r, n);
  return f;
}

TruncatedSeries color_witt_series(unsigned long r, unsigned long s,
                                  std::size_t order) {
  TruncatedSeries f(order);
  for (std::size_t n = 1; n <= order; ++n) f[n] = color_witt_dim(r, s, n);
  return f;
}

TruncatedSeries alphabet_series(const GradedAlphabet& alphabet,
                                std::size_t order) {
  TruncatedSeries f(order);
  for (const Generator& g : alphabet.generators()) {
    if (g.weight <= order) f[g.weight] += 1;
  }
  return f;
}

TruncatedSeries free_lie_series(const TruncatedSeries& generator_series) {
  if (!generator_series.has_zero_constant_term()) {
    throw InvalidInput("free_lie_series: generators must have weight >= 1");
  }
  if (!generator_series.is_nonnegative()) {
    throw InvalidInput("free_lie_series: generator counts must be nonnegative");
  }
  return inverse_euler_transform(geom_inverse(generator_series));
}

TruncatedSeries free_lie_series_from_alphabet(const GradedAlphabet& alphabet,
                                              std::size_t order) {
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (!alphabet.is_even(i)) {
      throw UnsupportedParity("generator '" + alphabet[i].label +
                              "' is odd; only purely even alphabets have a "
                              "weighted series formula");
    }
  }
  return free_lie_series(alphabet_series(alphabet, order));
}

}  // namespace colorlie
