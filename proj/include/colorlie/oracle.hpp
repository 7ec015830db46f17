#pragma once

#include <colorlie/alphabet.hpp>
#include <colorlie/bicharacter.hpp>
#include <colorlie/free_algebra.hpp>
#include <colorlie/integer.hpp>
#include <colorlie/signed_dimensions.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

// Brute-force realisation of free color Lie superalgebras inside the free
// associative algebra A<X> over Q. Everything here is computed by explicit
// enumeration and exact elimination, without using any closed formula, so
// it can serve as an independent check of the formulas elsewhere.

namespace colorlie {

struct OracleLimits {
  /// Largest number of words of a single weight (or k^n for enumeration)
  /// the oracle agrees to touch.
  std::uint64_t max_words = 1'000'000;
};

struct LieSpanResult {
  std::size_t dimension = 0;
  std::size_t even = 0;  // basis elements with degree in G_+
  std::size_t odd = 0;   // basis elements with degree in G_-
};

/// Builds homogeneous bases of the weight components L(X)_n degree by
/// degree: L_n is spanned by the generators of weight n together with all
/// [u, v], u in basis(L_k), v in basis(L_{n-k}), for every split k. The
/// bracket is the gamma-commutator of A<X>.
class FreeLieRealization {
 public:
  explicit FreeLieRealization(GradedAlphabet alphabet, OracleLimits limits = {});

  const GradedAlphabet& alphabet() const noexcept { return alphabet_; }

  /// Throws TooLarge when the number of words of this weight exceeds the cap.
  const std::vector<FreeAlgebraElement>& basis(unsigned weight);

  LieSpanResult span(unsigned weight);

 private:
  GradedAlphabet alphabet_;
  OracleLimits limits_;
  std::vector<std::vector<FreeAlgebraElement>> bases_;  // indexed by weight
};

/// dim L(X)_n with its split by parity. Validates the bicharacter first.
LieSpanResult lie_span_dimension(const GradedAlphabet& alphabet, unsigned n,
                                 OracleLimits limits = {});

/// (a_n, b_n) = parity split of dim L(X)_n for n = 1..max_degree.
SignedDimensionSequence oracle_parity_split(const GradedAlphabet& alphabet,
                                            unsigned max_degree,
                                            OracleLimits limits = {});

struct JacobiReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t skew_failures = 0;
  std::size_t jacobi_failures = 0;
  std::optional<std::string> witness;

  bool passed() const noexcept { return skew_failures == 0 && jacobi_failures == 0; }
};

/// Random homogeneous x, y, z (rational combinations of same-degree basis
/// elements of weight <= max_degree) checked against gamma-skew-symmetry
/// and the gamma-Jacobi identity, exactly. Deterministic in the seed.
JacobiReport verify_jacobi(const GradedAlphabet& alphabet, std::size_t trials,
                           unsigned max_degree, std::uint64_t seed,
                           OracleLimits limits = {});

/// dim (K cap L_w) for w = 1..max_weight, where K is the subalgebra
/// generated by `generators` under the gamma-bracket. Generators must be
/// homogeneous; their grade weight is their N-degree.
std::vector<std::size_t> subalgebra_dimensions(
    std::span<const FreeAlgebraElement> generators,
    const BicharacterTable& table, unsigned max_weight,
    OracleLimits limits = {});

std::size_t subalgebra_span_dimension(
    std::span<const FreeAlgebraElement> generators,
    const BicharacterTable& table, unsigned n, OracleLimits limits = {});

/// Number of Lyndon words of length n over k letters, by testing each of
/// the k^n words against all its proper rotations.
Integer lyndon_count(unsigned k, unsigned n, OracleLimits limits = {});

/// Degree-n PBW monomials over a basis with a_m even and b_m odd elements
/// of weight m: odd exponents are 0 or 1, even exponents are unbounded or at
/// most exponent_cap. Requires n <= dims.size().
Integer pbw_count(const SignedDimensionSequence& dims,
                  std::optional<unsigned> exponent_cap, unsigned n);

}  // namespace colorlie
