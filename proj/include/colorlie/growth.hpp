#pragma once

#include <colorlie/integer.hpp>
#include <colorlie/series.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace colorlie {

/// gamma(n) = sum_{k=1..n} dim_k for n = 1..N (element i holds gamma(i+1)).
/// The constant term is not counted. Throws InvalidInput on a negative
/// coefficient.
std::vector<Integer> growth_function(const TruncatedSeries& dims);

/// lambda(n) = gamma(n) - gamma(n-1), lambda(1) = gamma(1). Input and
/// output are indexed from n = 1. Throws InvalidInput if gamma decreases.
std::vector<Integer> lambda_differences(std::span<const Integer> gamma);

struct GrowthWindow {
  std::size_t start = 0;
  std::size_t end = 0;
};

enum class GrowthMethod { root_test, ratio_test };
enum class GrowthClass { exponential, polynomially_bounded, intermediate, inconclusive };

std::string_view to_string(GrowthMethod method) noexcept;
std::string_view to_string(GrowthClass growth) noexcept;

struct GrowthThresholds {
  double tau = 0.02;           // exponential if rate > 1 + tau
  double fit_residual = 0.1;   // RMS of log lambda against log n
};

/// Finite-window estimate of limsup lambda(n)^(1/n).
///
/// rate: root test normalised to the window,
///   (lambda(n2) / lambda(n1))^(1/(n2 - n1)),
/// with n1 < n2 the first and last degrees in the window where lambda > 0.
/// This cancels a prefactor c n^k in lambda(n) ~ c n^k rho^n, which the
/// plain n-th root only removes at rate log(n)/n.
/// raw_root: max over the window of lambda(n)^(1/n).
/// ratio: lambda(n+1)/lambda(n) at the last such pair inside the window.
struct GrowthEstimate {
  double rate = 0.0;
  GrowthMethod method = GrowthMethod::root_test;
  GrowthWindow window;
  GrowthClass classification = GrowthClass::inconclusive;
  double raw_root = 0.0;
  std::optional<double> ratio;
  std::optional<double> polynomial_degree;  // slope of the log-log fit
  std::optional<double> fit_residual;
};

/// Requires 1 <= start < end <= N and nonnegative coefficients.
///
/// Classification: inconclusive if root and ratio tests differ by more
/// than tau; polynomially bounded if log lambda is linear in log n up to
/// the residual threshold (or lambda has fewer than two nonzero samples);
/// exponential if rate > 1 + tau; intermediate otherwise.
GrowthEstimate growth_rate_estimate(const TruncatedSeries& dims,
                                    GrowthWindow window,
                                    GrowthThresholds thresholds = {});

/// n dim L_n / (r + s)^n for the free color Lie superalgebra on r even and
/// s odd generators; tends to 1.
double leading_term_ratio(unsigned long r, unsigned long s, unsigned long n);

struct GrowthComparison {
  double expected = 0.0;  // r + s
  GrowthEstimate lie;
  GrowthEstimate enveloping;
  double difference = 0.0;  // |lie.rate - enveloping.rate|
  double tolerance = 0.0;
  bool passed = false;
};

/// Compares growth-rate estimates of L (color Witt dimensions) and of
/// U(L) = A<X> (dimensions (r+s)^n) over the window (N/2, N). Passes iff
/// both rates lie within `tolerance` of r + s. Requires r + s >= 2, N >= 50.
GrowthComparison enveloping_growth_matches(unsigned long r, unsigned long s,
                                           std::size_t order,
                                           double tolerance = 0.05);

}  // namespace colorlie
