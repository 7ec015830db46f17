#include <colorlie/errors.hpp>
#include <colorlie/growth.hpp>
#include <colorlie/witt.hpp>

#include <algorithm>
#include <cmath>

namespace colorlie {

std::string_view to_string(GrowthMethod method) noexcept {
  switch (method) {
    case GrowthMethod::root_test:
      return "root_test";
    case GrowthMethod::ratio_test:
      return "ratio_test";
  }
  return "unknown";
}

std::string_view to_string(GrowthClass growth) noexcept {
  switch (growth) {
    case GrowthClass::exponential:
      return "exponential";
    case GrowthClass::polynomially_bounded:
      return "polynomially_bounded";
    case GrowthClass::intermediate:
      return "intermediate";
    case GrowthClass::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

std::vector<Integer> growth_function(const TruncatedSeries& dims) {
  std::vector<Integer> gamma;
  gamma.reserve(dims.order());
  Integer running = 0;
  for (std::size_t n = 1; n <= dims.order(); ++n) {
    if (dims[n] < 0) {
      throw InvalidInput("growth_function: negative dimension at degree " +
                         std::to_string(n));
    }
    running += dims[n];
    gamma.push_back(running);
  }
  return gamma;
}

std::vector<Integer> lambda_differences(std::span<const Integer> gamma) {
  std::vector<Integer> lambda;
  lambda.reserve(gamma.size());
  Integer previous = 0;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i] < previous) {
      throw InvalidInput("lambda_differences: growth function decreases at n = " +
                         std::to_string(i + 1));
    }
    lambda.push_back(gamma[i] - previous);
    previous = gamma[i];
  }
  return lambda;
}

GrowthEstimate growth_rate_estimate(const TruncatedSeries& dims,
                                    GrowthWindow window,
                                    GrowthThresholds thresholds) {
  if (window.start < 1 || window.start >= window.end ||
      window.end > dims.order()) {
    throw InvalidInput("growth window (" + std::to_string(window.start) + ", " +
                       std::to_string(window.end) +
                       ") must satisfy 1 <= start < end <= " +
                       std::to_string(dims.order()));
  }
  const std::vector<Integer> lambda = lambda_differences(growth_function(dims));

  GrowthEstimate estimate;
  estimate.window = window;

  // log lambda(n) for the positive samples in the window.
  std::vector<std::pair<std::size_t, double>> samples;
  for (std::size_t n = window.start; n <= window.end; ++n) {
    const Integer& value = lambda[n - 1];
    if (value > 0) samples.emplace_back(n, log_abs(value));
  }

  if (samples.empty()) {
    estimate.classification = GrowthClass::polynomially_bounded;
    return estimate;
  }

  for (const auto& [n, log_value] : samples) {
    estimate.raw_root =
        std::max(estimate.raw_root, std::exp(log_value / static_cast<double>(n)));
  }

  const auto& [first_n, first_log] = samples.front();
  const auto& [last_n, last_log] = samples.back();
  if (first_n == last_n) {
    estimate.rate = std::exp(last_log / static_cast<double>(last_n));
  } else {
    estimate.rate = std::exp((last_log - first_log) /
                             static_cast<double>(last_n - first_n));
  }

  for (std::size_t i = samples.size(); i-- > 1;) {
    if (samples[i].first == samples[i - 1].first + 1) {
      estimate.ratio = std::exp(samples[i].second - samples[i - 1].second);
      break;
    }
  }

  if (samples.size() < 2) {
    estimate.classification = GrowthClass::polynomially_bounded;
    return estimate;
  }

  if (samples.size() >= 3) {
    // Least squares fit of log lambda(n) = k log n + c.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(samples.size());
    for (const auto& [n, log_value] : samples) {
      const double x = std::log(static_cast<double>(n));
      sx += x;
      sy += log_value;
      sxx += x * x;
      sxy += x * log_value;
    }
    const double denom = m * sxx - sx * sx;
    if (denom > 0) {
      const double slope = (m * sxy - sx * sy) / denom;
      const double intercept = (sy - slope * sx) / m;
      double squares = 0;
      for (const auto& [n, log_value] : samples) {
        const double r =
            log_value - (slope * std::log(static_cast<double>(n)) + intercept);
        squares += r * r;
      }
      estimate.polynomial_degree = slope;
      estimate.fit_residual = std::sqrt(squares / m);
    }
  }

  if (estimate.ratio && std::abs(*estimate.ratio - estimate.rate) > thresholds.tau) {
    estimate.classification = GrowthClass::inconclusive;
  } else if (estimate.fit_residual &&
             *estimate.fit_residual <= thresholds.fit_residual) {
    estimate.classification = GrowthClass::polynomially_bounded;
  } else if (estimate.rate > 1.0 + thresholds.tau) {
    estimate.classification = GrowthClass::exponential;
  } else {
    estimate.classification = GrowthClass::intermediate;
  }
  return estimate;
}

double leading_term_ratio(unsigned long r, unsigned long s, unsigned long n) {
  Rational ratio(color_witt_dim(r, s, n) * n, ipow(Integer(r + s), n));
  ratio.canonicalize();
  return ratio.get_d();
}

GrowthComparison enveloping_growth_matches(unsigned long r, unsigned long s,
                                           std::size_t order, double tolerance) {
  if (r + s < 2) {
    throw InvalidInput("enveloping_growth_matches: need r + s >= 2");
  }
  if (order < 50) {
    throw InvalidInput("enveloping_growth_matches: need N >= 50");
  }
  const GrowthWindow window{order / 2, order};
  const TruncatedSeries lie = color_witt_series(r, s, order);
  const TruncatedSeries enveloping = geom_inverse(
      TruncatedSeries::monomial(Integer(r + s), 1, order));

  GrowthComparison result;
  result.expected = static_cast<double>(r + s);
  result.tolerance = tolerance;
  result.lie = growth_rate_estimate(lie, window);
  result.enveloping = growth_rate_estimate(enveloping, window);
  result.difference = std::abs(result.lie.rate - result.enveloping.rate);
  result.passed = std::abs(result.lie.rate - result.expected) <= tolerance &&
                  std::abs(result.enveloping.rate - result.expected) <= tolerance;
  return result;
}

}  // namespace colorlie
