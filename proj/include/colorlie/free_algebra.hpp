#pragma once

#include <colorlie/alphabet.hpp>
#include <colorlie/bicharacter.hpp>
#include <colorlie/integer.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace colorlie {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

/// Weight and grading-group degree (as a BicharacterTable index) shared by
/// every word of a homogeneous element.
struct Grade {
  unsigned weight = 0;
  std::size_t degree = 0;

  bool operator==(const Grade&) const = default;
};

/// Element of the free associative algebra A<X> over Q: a sparse map from
/// words (sequences of generator indices) to nonzero rational coefficients.
/// The grade is set when the element is known to be homogeneous. A zero
/// element lies in every homogeneous component and is treated as such.
class FreeAlgebraElement {
 public:
  FreeAlgebraElement() = default;

  static FreeAlgebraElement generator(const GradedAlphabet& alphabet,
                                      std::size_t index);

  /// A single word; the grade is computed from the alphabet.
  static FreeAlgebraElement monomial(const GradedAlphabet& alphabet, Word word,
                                     const Rational& coefficient = 1);

  const std::map<Word, Rational>& terms() const noexcept { return terms_; }
  const std::optional<Grade>& grade() const noexcept { return grade_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_homogeneous() const noexcept { return is_zero() || grade_.has_value(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Word& word) const;

  FreeAlgebraElement& operator+=(const FreeAlgebraElement& other);
  FreeAlgebraElement& operator-=(const FreeAlgebraElement& other);
  FreeAlgebraElement& operator*=(const Rational& scalar);

  /// Equality of the underlying linear combinations.
  bool operator==(const FreeAlgebraElement& other) const {
    return terms_ == other.terms_;
  }

  /// Checks the stored grade against the alphabet word by word.
  bool is_consistent_with(const GradedAlphabet& alphabet) const;

  std::string format(const GradedAlphabet& alphabet) const;

 private:
  void add_term(const Word& word, const Rational& coefficient);
  void merge_grade(const FreeAlgebraElement& other);

  friend FreeAlgebraElement multiply(const FreeAlgebraElement&,
                                     const FreeAlgebraElement&,
                                     const BicharacterTable&);

  std::map<Word, Rational> terms_;
  std::optional<Grade> grade_;
};

FreeAlgebraElement operator+(FreeAlgebraElement u, const FreeAlgebraElement& v);
FreeAlgebraElement operator-(FreeAlgebraElement u, const FreeAlgebraElement& v);
FreeAlgebraElement operator*(const Rational& c, FreeAlgebraElement u);

/// Concatenation product; grades add when both factors are homogeneous.
FreeAlgebraElement multiply(const FreeAlgebraElement& u,
                            const FreeAlgebraElement& v,
                            const BicharacterTable& table);

/// [u, v] = uv - gamma(d(u), d(v)) vu. Throws InvalidInput unless both
/// arguments are homogeneous.
FreeAlgebraElement super_commutator(const FreeAlgebraElement& u,
                                    const FreeAlgebraElement& v,
                                    const BicharacterTable& table);

}  // namespace colorlie
