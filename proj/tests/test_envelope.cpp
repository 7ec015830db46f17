#include <colorlie/envelope.hpp>
#include <colorlie/errors.hpp>
#include <colorlie/oracle.hpp>

#include <doctest.h>

#include <random>

using namespace colorlie;
using Seq = SignedDimensionSequence;

namespace {

TruncatedSeries ints(std::initializer_list<long> c, std::size_t order) {
  return TruncatedSeries::from_ints(c, order);
}

Seq random_dims(std::mt19937_64& rng, std::size_t length, int hi) {
  std::uniform_int_distribution<int> dist(0, hi);
  std::vector<Integer> even, odd;
  for (std::size_t n = 0; n < length; ++n) {
    even.emplace_back(dist(rng));
    odd.emplace_back(dist(rng));
  }
  return {even, odd};
}

}  // namespace

TEST_CASE("enveloping_series") {
  // S(V) on two generators of degree 1: dim S^n = n + 1.
  CHECK(enveloping_series(Seq::padded({2}, {}, 6)) == ints({1, 2, 3, 4, 5, 6, 7}, 6));
  // Lambda(V) on two odd generators.
  CHECK(enveloping_series(Seq::padded({}, {2}, 5)) == ints({1, 2, 1}, 5));

  const Seq split = oracle_parity_split(GradedAlphabet::free_superalgebra(1, 1), 5);
  CHECK(enveloping_series(split) == ints({1, 2, 4, 8, 16, 32}, 5));
}

TEST_CASE("enveloping_series factorises as U(L_+) (x) Lambda(L_-)") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const Seq dims = random_dims(rng, 12, 4);
    const std::vector<Integer> zeros(12, Integer(0));
    const std::vector<Integer> even(dims.even_dims().begin(), dims.even_dims().end());
    const std::vector<Integer> odd(dims.odd_dims().begin(), dims.odd_dims().end());
    CHECK(enveloping_series(dims) ==
          tensor_series(super_euler_transform(Seq(even, zeros)),
                        super_euler_transform(Seq(zeros, odd))));
  }
}

TEST_CASE("restricted_enveloping_series") {
  const RestrictedOptions trivial{.trivial_grading = true};
  CHECK(restricted_enveloping_series(Seq::padded({1}, {}, 5), 3, trivial) ==
        ints({1, 1, 1}, 5));
  CHECK(restricted_enveloping_series(Seq::padded({2}, {}, 5), 2, trivial) ==
        ints({1, 2, 1}, 5));
  CHECK(restricted_enveloping_series(Seq::padded({}, {1}, 5), 5) == ints({1, 1}, 5));

  CHECK_THROWS_AS(restricted_enveloping_series(Seq::padded({1}, {}, 5), 3),
                  InvalidCharacteristic);
  CHECK_THROWS_AS(restricted_enveloping_series(Seq::padded({}, {1}, 5), 2),
                  InvalidCharacteristic);
  CHECK_THROWS_AS(restricted_enveloping_series(Seq::padded({1}, {}, 5), 6), InvalidInput);
  CHECK_THROWS_AS(restricted_enveloping_series(Seq::padded({}, {1}, 5), 3, trivial),
                  InvalidInput);
  const RestrictedOptions forced{.override_characteristic = true};
  CHECK(restricted_enveloping_series(Seq::padded({}, {1}, 5), 3, forced) == ints({1, 1}, 5));
}

TEST_CASE("finite-dimensional u(L) has dimension p^a 2^b") {
  const RestrictedOptions forced{.override_characteristic = true};
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (long a = 0; a <= 3; ++a) {
      for (long b = 0; b <= 3; ++b) {
        // Degree bound of the polynomial is a(p-1) + b.
        const std::size_t order = static_cast<std::size_t>(a * (p - 1) + b + 2);
        const TruncatedSeries u =
            restricted_enveloping_series(Seq::padded({a}, {b}, order), p, forced);
        Integer total = 0;
        for (const Integer& c : u.coefficients()) total += c;
        CHECK(u[order] == 0);
        CHECK(total == ipow(Integer(p), a) * ipow(Integer(2), b));
      }
    }
  }
}

TEST_CASE("restricted series is bounded by the unrestricted one") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Seq dims = random_dims(rng, 15, 3);
    for (unsigned p : {5u, 7u}) {
      const TruncatedSeries u = restricted_enveloping_series(dims, p);
      const TruncatedSeries big = enveloping_series(dims);
      for (std::size_t n = 0; n <= 15; ++n) CHECK(u[n] <= big[n]);
    }
  }
}

TEST_CASE("direct sum and tensor product of filtered spaces") {
  CHECK(direct_sum_series(ints({1, 1}, 3), ints({1, 1}, 3)) == ints({2, 2}, 3));
  CHECK(tensor_series(ints({1, 1}, 3), ints({1, 1}, 3)) == ints({1, 2, 1}, 3));
  const TruncatedSeries f = ints({2, 0, 5, 1}, 3);
  CHECK(direct_sum_series(f, TruncatedSeries(3)) == f);
  CHECK(tensor_series(f, TruncatedSeries::one(3)) == f);

  // Filtered dimension tables: dim U^n, dim V^n cumulative; the series
  // coefficients are the successive quotients.
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> dist(0, 9);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<long> u_cum(11), v_cum(11);
    long u = 0, v = 0;
    for (int n = 0; n <= 10; ++n) {
      u_cum[n] = (u += dist(rng));
      v_cum[n] = (v += dist(rng));
    }
    TruncatedSeries hu(10), hv(10), expected(10);
    for (int n = 0; n <= 10; ++n) {
      hu[n] = u_cum[n] - (n ? u_cum[n - 1] : 0);
      hv[n] = v_cum[n] - (n ? v_cum[n - 1] : 0);
      // (U + V)^n = U^n + V^n
      expected[n] = (u_cum[n] + v_cum[n]) - (n ? u_cum[n - 1] + v_cum[n - 1] : 0);
    }
    CHECK(direct_sum_series(hu, hv) == expected);
  }
}
