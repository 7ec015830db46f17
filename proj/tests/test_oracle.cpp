#include <colorlie/envelope.hpp>
#include <colorlie/errors.hpp>
#include <colorlie/integer.hpp>
#include <colorlie/number_theory.hpp>
#include <colorlie/oracle.hpp>
#include <colorlie/witt.hpp>

#include <doctest.h>

using namespace colorlie;

TEST_CASE("lie_span_dimension of free Lie algebras") {
  for (unsigned r = 1; r <= 3; ++r) {
    FreeLieRealization lie(GradedAlphabet::free_superalgebra(r, 0));
    const unsigned top = r == 3 ? 6 : 7;
    for (unsigned n = 1; n <= top; ++n) {
      CAPTURE(r);
      CAPTURE(n);
      const LieSpanResult span = lie.span(n);
      CHECK(span.dimension == witt_dim(r, n));
      CHECK(span.odd == 0);
    }
  }
  CHECK(lie_span_dimension(GradedAlphabet::free_superalgebra(2, 0), 3).dimension == 2);
}

TEST_CASE("lie_span_dimension of free Lie superalgebras") {
  const LieSpanResult two = lie_span_dimension(GradedAlphabet::free_superalgebra(1, 1), 2);
  CHECK(two.dimension == 2);
  CHECK(two.even == 1);  // [y, y]
  CHECK(two.odd == 1);   // [x, y]

  for (const auto& [r, s] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 1}, {1, 2}}) {
    FreeLieRealization lie(GradedAlphabet::free_superalgebra(r, s));
    CHECK(lie.span(1).dimension == r + s);
    for (unsigned n = 1; n <= 5; ++n) {
      const LieSpanResult span = lie.span(n);
      CHECK(span.even + span.odd == span.dimension);
      CHECK(span.dimension == color_witt_dim(r, s, n));
    }
  }
}

TEST_CASE("size cap") {
  const OracleLimits tiny{.max_words = 100};
  CHECK_THROWS_AS(lie_span_dimension(GradedAlphabet::free_superalgebra(3, 0), 5, tiny), TooLarge);
  CHECK_THROWS_AS(lyndon_count(2, 7, tiny), TooLarge);
}

TEST_CASE("an invalid bicharacter is refused") {
  const auto table = BicharacterTable::from_values({2}, {1, -1, 1, -1});
  const GradedAlphabet alphabet(table, {{"a", 1, {1}}});
  CHECK_THROWS_AS(lie_span_dimension(alphabet, 2), InvalidBicharacter);
}

TEST_CASE("verify_jacobi") {
  const GradedAlphabet even = GradedAlphabet::even_weighted(std::vector<unsigned>{1, 1});
  const JacobiReport a = verify_jacobi(even, 100, 4, 1);
  CHECK(a.passed());
  CHECK(a.seed == 1);
  CHECK(a.trials == 100);

  CHECK(verify_jacobi(GradedAlphabet::free_superalgebra(1, 1), 100, 4, 2).passed());

  const GradedAlphabet color(
      BicharacterTable::from_generators({2, 2}, {{1, -1}, {-1, -1}}),
      {{"a", 1, {1, 0}}, {"b", 1, {0, 1}}, {"c", 1, {1, 1}}});
  CHECK(verify_jacobi(color, 50, 3, 3).passed());
}

TEST_CASE("verify_jacobi with gamma = 1 on Z2") {
  const GradedAlphabet ordinary(BicharacterTable::from_generators({2}, {{1}}),
                                {{"x", 1, {0}}, {"y", 1, {1}}});
  const JacobiReport report = verify_jacobi(ordinary, 30, 3, 9);
  CHECK(report.passed());
  CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("subalgebra_span_dimension") {
  const GradedAlphabet alphabet = GradedAlphabet::free_superalgebra(1, 1);
  const auto& table = alphabet.table();
  const auto x = FreeAlgebraElement::generator(alphabet, 0);
  const auto y = FreeAlgebraElement::generator(alphabet, 1);
  const std::vector<FreeAlgebraElement> gens{x, super_commutator(x, y, table),
                                             super_commutator(y, y, table)};
  CHECK(subalgebra_span_dimension(gens, table, 1) == 1);
  CHECK(subalgebra_span_dimension(gens, table, 2) == 2);

  // K = L when generated by X itself.
  const std::vector<FreeAlgebraElement> all{x, y};
  FreeLieRealization lie(alphabet);
  for (unsigned n = 1; n <= 5; ++n) {
    CHECK(subalgebra_span_dimension(all, table, n) == lie.span(n).dimension);
  }

  const std::vector<FreeAlgebraElement> bad{x + y};
  CHECK_THROWS_AS(subalgebra_span_dimension(bad, table, 2), InvalidInput);
}

TEST_CASE("lyndon_count") {
  CHECK(lyndon_count(2, 3) == 2);
  CHECK(lyndon_count(3, 2) == 3);
  for (unsigned k = 1; k <= 5; ++k) CHECK(lyndon_count(k, 1) == k);
  CHECK(lyndon_count(1, 4) == 0);
  for (unsigned k = 1; k <= 4; ++k) {
    for (unsigned n = 1; n <= 8; ++n) {
      Integer sum = 0;
      for (auto d : divisors(n)) sum += moebius(d) * ipow(Integer(k), n / d);
      CHECK(lyndon_count(k, n) * n == sum);
    }
  }
}

TEST_CASE("pbw_count") {
  using Seq = SignedDimensionSequence;
  CHECK(pbw_count(Seq::padded({1}, {}, 4), std::nullopt, 4) == 1);
  CHECK(pbw_count(Seq::padded({1}, {}, 4), 2u, 3) == 0);
  CHECK(pbw_count(Seq::padded({1}, {}, 4), 2u, 2) == 1);

  const Seq split = oracle_parity_split(GradedAlphabet::free_superalgebra(1, 1), 3);
  CHECK(pbw_count(split, std::nullopt, 3) == 8);

  const Seq wide = oracle_parity_split(GradedAlphabet::free_superalgebra(2, 1), 5);
  const TruncatedSeries u = enveloping_series(wide);
  const TruncatedSeries small = restricted_enveloping_series(wide, 5);
  for (unsigned n = 0; n <= 5; ++n) {
    CHECK(pbw_count(wide, std::nullopt, n) == u[n]);
    CHECK(pbw_count(wide, 4u, n) == small[n]);
  }
  CHECK_THROWS_AS(pbw_count(split, std::nullopt, 4), InvalidInput);
}

TEST_CASE("parity split totals match the color Witt formula") {
  for (const auto& [r, s] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 1}, {1, 2}}) {
    const SignedDimensionSequence split =
        oracle_parity_split(GradedAlphabet::free_superalgebra(r, s), 5);
    for (unsigned n = 1; n <= 5; ++n) {
      CHECK(split.even(n) + split.odd(n) == color_witt_dim(r, s, n));
    }
  }
}
