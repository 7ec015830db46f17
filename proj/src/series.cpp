#include <colorlie/errors.hpp>
#include <colorlie/number_theory.hpp>
#include <colorlie/series.hpp>

#include <algorithm>
#include <ostream>

namespace colorlie {

namespace {

// g <- g * (1 - t^step)^(-exponent), for any integer exponent. Uses
// (1 - x)^(-a) = sum_k binom(a + k - 1, k) x^k, which stays integral for
// negative a as well.
void multiply_by_euler_factor(std::vector<Integer>& g, std::size_t step,
                              const Integer& exponent) {
  if (exponent == 0 || step == 0) return;
  const std::size_t top = g.size() - 1;
  const std::size_t terms = top / step;
  if (terms == 0) return;
  std::vector<Integer> binom(terms + 1);
  binom[0] = 1;
  for (std::size_t k = 1; k <= terms; ++k) {
    binom[k] = binom[k - 1] * (exponent + static_cast<unsigned long>(k - 1));
    mpz_divexact_ui(binom[k].get_mpz_t(), binom[k].get_mpz_t(), k);
  }
  // Descending n keeps g[n - k*step] at its old value when read.
  for (std::size_t n = top; n >= step; --n) {
    for (std::size_t k = 1; k * step <= n; ++k) {
      g[n] += binom[k] * g[n - k * step];
    }
  }
}

// g <- g * (1 + t^step)^count, count >= 0.
void multiply_by_exterior_factor(std::vector<Integer>& g, std::size_t step,
                                 const Integer& count) {
  if (count == 0) return;
  const std::size_t top = g.size() - 1;
  const std::size_t terms = top / step;
  if (terms == 0) return;
  std::vector<Integer> binom(terms + 1);
  binom[0] = 1;
  for (std::size_t k = 1; k <= terms; ++k) {
    binom[k] = binom[k - 1] * (count - static_cast<unsigned long>(k - 1));
    mpz_divexact_ui(binom[k].get_mpz_t(), binom[k].get_mpz_t(), k);
  }
  for (std::size_t n = top; n >= step; --n) {
    for (std::size_t k = 1; k * step <= n; ++k) {
      g[n] += binom[k] * g[n - k * step];
    }
  }
}

void require_zero_constant(const TruncatedSeries& f, const char* op) {
  if (!f.has_zero_constant_term()) {
    throw InvalidInput(std::string(op) + ": constant term must be zero");
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order)
    : coefficients_(order + 1, Integer(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<Integer> coefficients,
                                 std::size_t order)
    : coefficients_(std::move(coefficients)) {
  coefficients_.resize(order + 1, Integer(0));
}

TruncatedSeries TruncatedSeries::from_ints(
    std::initializer_list<long> coefficients, std::size_t order) {
  std::vector<Integer> c;
  c.reserve(coefficients.size());
  for (long x : coefficients) c.emplace_back(x);
  return {std::move(c), order};
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  return monomial(Integer(1), 0, order);
}

TruncatedSeries TruncatedSeries::monomial(const Integer& coefficient,
                                          std::size_t degree,
                                          std::size_t order) {
  TruncatedSeries f(order);
  if (degree <= order) f.coefficients_[degree] = coefficient;
  return f;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw InvalidInput("cannot raise the truncation order of a series");
  }
  return {std::vector<Integer>(coefficients_.begin(),
                               coefficients_.begin() + order + 1),
          order};
}

bool TruncatedSeries::is_nonnegative() const {
  return std::ranges::all_of(coefficients_,
                             [](const Integer& c) { return c >= 0; });
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
  TruncatedSeries h(std::min(f.order(), g.order()));
  for (std::size_t k = 0; k <= h.order(); ++k) h[k] = f[k] + g[k];
  return h;
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
  TruncatedSeries h(std::min(f.order(), g.order()));
  for (std::size_t k = 0; k <= h.order(); ++k) h[k] = f[k] - g[k];
  return h;
}

TruncatedSeries operator-(const TruncatedSeries& f) {
  TruncatedSeries h(f.order());
  for (std::size_t k = 0; k <= h.order(); ++k) h[k] = -f[k];
  return h;
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
  TruncatedSeries h(std::min(f.order(), g.order()));
  for (std::size_t i = 0; i <= h.order(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; i + j <= h.order(); ++j) h[i + j] += f[i] * g[j];
  }
  return h;
}

TruncatedSeries operator*(const Integer& c, const TruncatedSeries& f) {
  TruncatedSeries h(f.order());
  for (std::size_t k = 0; k <= h.order(); ++k) h[k] = c * f[k];
  return h;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f) {
  os << '[';
  for (std::size_t k = 0; k <= f.order(); ++k) {
    if (k != 0) os << ", ";
    os << f[k].get_str();
  }
  return os << "] + O(t^" << f.order() + 1 << ')';
}

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g) {
  return f + g;
}

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  return f * g;
}

TruncatedSeries geom_inverse(const TruncatedSeries& f) {
  require_zero_constant(f, "geom_inverse");
  TruncatedSeries g(f.order());
  g[0] = 1;
  for (std::size_t n = 1; n <= g.order(); ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      if (f[k] != 0) g[n] += f[k] * g[n - k];
    }
  }
  return g;
}

TruncatedSeries euler_transform(const TruncatedSeries& f) {
  require_zero_constant(f, "euler_transform");
  std::vector<Integer> g(f.order() + 1, Integer(0));
  g[0] = 1;
  for (std::size_t i = 1; i <= f.order(); ++i) {
    multiply_by_euler_factor(g, i, f[i]);
  }
  return {std::move(g), f.order()};
}

TruncatedSeries inverse_euler_transform(const TruncatedSeries& f) {
  if (f[0] != 1) {
    throw InvalidInput("inverse_euler_transform: constant term must be 1");
  }
  const std::size_t top = f.order();

  // Power sums b_m = m [t^m] (t f'/f). Since f(0) = 1 the quotient is
  // computed by the recurrence f * b = t f', which only divides by f(0).
  std::vector<Integer> power_sums(top + 1, Integer(0));
  for (std::size_t m = 1; m <= top; ++m) {
    Integer b = f[m] * static_cast<unsigned long>(m);
    for (std::size_t j = 1; j < m; ++j) b -= power_sums[j] * f[m - j];
    power_sums[m] = b;
  }

  TruncatedSeries a(top);
  for (std::size_t n = 1; n <= top; ++n) {
    Integer sum = 0;
    for (std::uint64_t d : divisors(n)) {
      const int mu = moebius(n / d);
      if (mu > 0) sum += power_sums[d];
      if (mu < 0) sum -= power_sums[d];
    }
    if (!mpz_divisible_ui_p(sum.get_mpz_t(), n)) {
      throw NotAnEulerTransform("Möbius-inverted power sum " + sum.get_str() +
                                " at degree " + std::to_string(n) +
                                " is not divisible by " + std::to_string(n));
    }
    mpz_divexact_ui(a[n].get_mpz_t(), sum.get_mpz_t(), n);
  }
  return a;
}

TruncatedSeries super_euler_transform(const SignedDimensionSequence& dims) {
  const std::size_t top = dims.size();
  std::vector<Integer> g(top + 1, Integer(0));
  g[0] = 1;
  for (std::size_t n = 1; n <= top; ++n) {
    multiply_by_euler_factor(g, n, dims.even(n));
    multiply_by_exterior_factor(g, n, dims.odd(n));
  }
  return {std::move(g), top};
}

TruncatedSeries restricted_euler_transform(const SignedDimensionSequence& dims,
                                           std::uint64_t p) {
  if (!is_prime(p)) {
    throw InvalidInput("restricted_euler_transform: " + std::to_string(p) +
                       " is not prime");
  }
  const std::size_t top = dims.size();
  std::vector<Integer> g(top + 1, Integer(0));
  g[0] = 1;
  for (std::size_t n = 1; n <= top; ++n) {
    // (1 - t^(pn))^a (1 - t^n)^(-a); the first factor is 1 mod t^(top+1)
    // once pn > top.
    multiply_by_euler_factor(g, n, dims.even(n));
    if (p * n <= top) multiply_by_euler_factor(g, p * n, -dims.even(n));
    multiply_by_exterior_factor(g, n, dims.odd(n));
  }
  return {std::move(g), top};
}

}  // namespace colorlie
