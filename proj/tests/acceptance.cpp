// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <colorlie/envelope.hpp>
#include <colorlie/growth.hpp>
#include <colorlie/oracle.hpp>
#include <colorlie/schreier.hpp>
#include <colorlie/series.hpp>
#include <colorlie/witt.hpp>

#include "reference.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace colorlie;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0 = no limit
  std::function<void(Outcome&)> body;
};

std::string str(const Integer& v) { return v.get_str(); }

void witt_lyndon(Outcome& o) {
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned n = 1; n <= 10; ++n) {
      const Integer w = witt_dim(r, n);
      const Integer l = lyndon_count(r, n);
      if (w != l) {
        o.fail("r=" + std::to_string(r) + " n=" + std::to_string(n) + ": witt " + str(w) +
               " lyndon " + str(l));
      }
    }
  }
}

void color_witt_oracle(Outcome& o) {
  const std::vector<std::pair<unsigned, unsigned>> cases{{1, 1}, {2, 1}, {1, 2}};
  for (const auto& [r, s] : cases) {
    FreeLieRealization lie(GradedAlphabet::free_superalgebra(r, s));
    for (unsigned n = 1; n <= 5; ++n) {
      const Integer formula = color_witt_dim(r, s, n);
      const std::size_t oracle = lie.span(n).dimension;
      if (formula != Integer(static_cast<unsigned long>(oracle))) {
        o.fail("(" + std::to_string(r) + "," + std::to_string(s) + ") n=" + std::to_string(n) +
               ": formula " + str(formula) + " oracle " + std::to_string(oracle));
      }
    }
  }
}

void pbw_euler(Outcome& o) {
  constexpr std::size_t order = 30;
  for (long r = 1; r <= 5; ++r) {
    const TruncatedSeries lhs = euler_transform(witt_series(r, order));
    const TruncatedSeries rhs = geom_inverse(TruncatedSeries::monomial(r, 1, order));
    if (lhs != rhs) o.fail("r=" + std::to_string(r));
  }
}

void super_pbw(Outcome& o) {
  const SignedDimensionSequence split =
      oracle_parity_split(GradedAlphabet::free_superalgebra(1, 1), 5);
  const TruncatedSeries u = enveloping_series(split);
  const TruncatedSeries expected = geom_inverse(TruncatedSeries::monomial(2, 1, 5));
  if (u != expected) {
    std::ostringstream os;
    os << "got " << u;
    o.fail(os.str());
  }
}

void schreier_commutator(Outcome& o) {
  constexpr std::size_t order = 15;
  const TruncatedSeries two_t = TruncatedSeries::monomial(2, 1, order);
  const TruncatedSeries z = lie_schreier_series(two_t, two_t);
  for (std::size_t n = 2; n <= order; ++n) {
    if (z[n] != Integer(static_cast<unsigned long>(n - 1))) {
      o.fail("coefficient " + std::to_string(n) + " is " + str(z[n]));
    }
  }
  if (free_lie_series(z) != witt_series(2, order) - two_t) {
    o.fail("free_lie_series(H_Z) != witt_series(2,15) - 2t");
  }
}

void example_color_schreier(Outcome& o) {
  for (long r = 1; r <= 5; ++r) {
    if (color_schreier_rank(r + 1, 1) != 2 * r + 1) o.fail("rank formula at r=" + std::to_string(r));
  }
  // L free on x (even) and y (odd), K generated by x, [x,y], [y,y].
  const GradedAlphabet alphabet = GradedAlphabet::free_superalgebra(1, 1);
  const auto& table = alphabet.table();
  const FreeAlgebraElement x = FreeAlgebraElement::generator(alphabet, 0);
  const FreeAlgebraElement y = FreeAlgebraElement::generator(alphabet, 1);
  const std::vector<FreeAlgebraElement> gens{x, super_commutator(x, y, table),
                                             super_commutator(y, y, table)};
  const auto k = subalgebra_dimensions(gens, table, 4);
  FreeLieRealization lie(alphabet);
  for (unsigned n = 1; n <= 4; ++n) {
    const std::size_t expected = lie.span(n).dimension - (n == 1 ? 1 : 0);
    if (k[n - 1] != expected) {
      o.fail("n=" + std::to_string(n) + ": dim K_n " + std::to_string(k[n - 1]) + " expected " +
             std::to_string(expected));
    }
  }
}

void growth_rates(Outcome& o) {
  const GrowthComparison cmp = enveloping_growth_matches(2, 1, 200);
  std::ostringstream os;
  os << "lie " << cmp.lie.rate << ", enveloping " << cmp.enveloping.rate;
  if (std::abs(cmp.lie.rate - 3.0) >= 0.05 || std::abs(cmp.enveloping.rate - 3.0) >= 0.05) {
    o.fail(os.str());
  }
  const TruncatedSeries dims = color_witt_series(2, 1, 200);
  for (unsigned n = 40; n <= 200; ++n) {
    const double v = std::exp(std::log(static_cast<double>(n)) + log_abs(dims[n]) -
                              n * std::log(3.0));
    if (std::abs(v - 1.0) >= 0.01) o.fail("n dim L_n / 3^n = " + std::to_string(v) +
                                          " at n=" + std::to_string(n));
  }
  if (o.passed) o.detail = os.str();
}

void restricted_pbw(Outcome& o) {
  const SignedDimensionSequence line = SignedDimensionSequence::padded({1}, {}, 4);
  const TruncatedSeries u =
      restricted_enveloping_series(line, 3, RestrictedOptions{.trivial_grading = true});
  if (u != TruncatedSeries::from_ints({1, 1, 1, 0, 0}, 4)) o.fail("u(L) for a1=1, p=3");
  for (unsigned n = 0; n <= 4; ++n) {
    if (pbw_count(line, 2u, n) != u[n]) o.fail("pbw_count mismatch at n=" + std::to_string(n));
  }

  for (unsigned long p : {3ul, 5ul, 7ul}) {
    for (unsigned long a = 0; a <= 3; ++a) {
      for (unsigned long b = 0; b <= 3; ++b) {
        const std::size_t order = a * (p - 1) + b + 1;
        const auto dims = SignedDimensionSequence::padded({Integer(a)}, {Integer(b)}, order);
        const TruncatedSeries h = restricted_enveloping_series(
            dims, p, RestrictedOptions{.override_characteristic = true});
        Integer total = 0;
        for (std::size_t n = 0; n <= order; ++n) total += h[n];
        const Integer expected = ipow(Integer(p), a) * ipow(Integer(2), b);
        if (total != expected || h[order] != 0) {
          o.fail("p=" + std::to_string(p) + " a=" + std::to_string(a) + " b=" +
                 std::to_string(b) + ": " + str(total));
        }
      }
    }
  }
}

void jacobi(Outcome& o) {
  const std::vector<std::pair<std::string, GradedAlphabet>> configs{
      {"(2,0) trivial", GradedAlphabet::even_weighted(std::vector<unsigned>{1, 1})},
      {"(1,1) Z2", GradedAlphabet::free_superalgebra(1, 1)},
      {"Z2xZ2", GradedAlphabet(BicharacterTable::from_generators({2, 2}, {{1, -1}, {-1, -1}}),
                               {{"a", 1, {1, 0}}, {"b", 1, {0, 1}}, {"c", 1, {1, 1}}})},
  };
  std::uint64_t seed = 1;
  for (const auto& [name, alphabet] : configs) {
    const JacobiReport report = verify_jacobi(alphabet, 100, 4, seed++);
    if (report.trials != 100 || !report.passed()) {
      o.fail(name + ": " + report.witness.value_or("trial count"));
    }
  }
}

void euler_round_trip(Outcome& o) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const TruncatedSeries a = reference::random_series(rng, 48, -20, 20);
    if (inverse_euler_transform(euler_transform(a)) != a) {
      o.fail("trial " + std::to_string(trial));
      return;
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Witt formula equals Lyndon word count", 5.0, witt_lyndon},
      {2, "color Witt formula equals oracle span", 60.0, color_witt_oracle},
      {3, "Euler transform of Witt series is 1/(1-rt)", 1.0, pbw_euler},
      {4, "super PBW over oracle parity split", 0.0, super_pbw},
      {5, "Schreier series for the commutator subalgebra", 0.0, schreier_commutator},
      {6, "odd codimension one Schreier rank", 0.0, example_color_schreier},
      {7, "growth rate of free Lie superalgebra (2,1)", 1.0, growth_rates},
      {8, "restricted PBW", 0.0, restricted_pbw},
      {9, "color Jacobi identity", 0.0, jacobi},
      {10, "Euler round trip", 0.0, euler_round_trip},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && elapsed >= c.time_limit_s) {
      outcome.fail("took " + std::to_string(elapsed) + " s");
    }
    if (!outcome.passed) ++failures;
    std::printf("%s  %2d  %-48s %8.3f s%s%s\n", outcome.passed ? "PASS" : "FAIL", c.id,
                c.name.c_str(), elapsed, outcome.detail.empty() ? "" : "  ",
                outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
