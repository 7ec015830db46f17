#include <colorlie/errors.hpp>
#include <colorlie/free_algebra.hpp>

#include <sstream>

namespace colorlie {

FreeAlgebraElement FreeAlgebraElement::generator(const GradedAlphabet& alphabet,
                                                 std::size_t index) {
  if (index >= alphabet.size()) {
    throw InvalidInput("generator index " + std::to_string(index) +
                       " out of range");
  }
  return monomial(alphabet, Word{static_cast<Letter>(index)});
}

FreeAlgebraElement FreeAlgebraElement::monomial(const GradedAlphabet& alphabet,
                                                Word word,
                                                const Rational& coefficient) {
  Grade grade{0, alphabet.table().identity()};
  for (Letter letter : word) {
    if (letter >= alphabet.size()) {
      throw InvalidInput("letter " + std::to_string(letter) + " out of range");
    }
    grade.weight += alphabet[letter].weight;
    grade.degree = alphabet.table().add(grade.degree, alphabet.degree_index(letter));
  }
  FreeAlgebraElement e;
  e.grade_ = grade;
  e.add_term(word, coefficient);
  return e;
}

Rational FreeAlgebraElement::coefficient(const Word& word) const {
  const auto it = terms_.find(word);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FreeAlgebraElement::add_term(const Word& word, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(word, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

void FreeAlgebraElement::merge_grade(const FreeAlgebraElement& other) {
  if (other.is_zero()) return;
  if (is_zero()) {
    grade_ = other.grade_;
    return;
  }
  if (grade_ != other.grade_) grade_.reset();
}

FreeAlgebraElement& FreeAlgebraElement::operator+=(const FreeAlgebraElement& other) {
  merge_grade(other);
  for (const auto& [word, c] : other.terms_) add_term(word, c);
  return *this;
}

FreeAlgebraElement& FreeAlgebraElement::operator-=(const FreeAlgebraElement& other) {
  merge_grade(other);
  for (const auto& [word, c] : other.terms_) add_term(word, -c);
  return *this;
}

FreeAlgebraElement& FreeAlgebraElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [word, c] : terms_) c *= scalar;
  return *this;
}

bool FreeAlgebraElement::is_consistent_with(const GradedAlphabet& alphabet) const {
  for (const auto& [word, c] : terms_) {
    if (c == 0) return false;
    if (!grade_) continue;
    if (FreeAlgebraElement::monomial(alphabet, word).grade_ != grade_) return false;
  }
  return true;
}

std::string FreeAlgebraElement::format(const GradedAlphabet& alphabet) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [word, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << '-';
    first = false;
    const Rational magnitude = abs(c);
    if (magnitude != 1) os << magnitude.get_str() << '*';
    for (std::size_t i = 0; i < word.size(); ++i) {
      os << (i ? " " : "") << alphabet[word[i]].label;
    }
  }
  return os.str();
}

FreeAlgebraElement operator+(FreeAlgebraElement u, const FreeAlgebraElement& v) {
  u += v;
  return u;
}

FreeAlgebraElement operator-(FreeAlgebraElement u, const FreeAlgebraElement& v) {
  u -= v;
  return u;
}

FreeAlgebraElement operator*(const Rational& c, FreeAlgebraElement u) {
  u *= c;
  return u;
}

FreeAlgebraElement multiply(const FreeAlgebraElement& u,
                            const FreeAlgebraElement& v,
                            const BicharacterTable& table) {
  FreeAlgebraElement product;
  if (u.is_zero() || v.is_zero()) return product;
  if (u.grade_ && v.grade_) {
    product.grade_ = Grade{u.grade_->weight + v.grade_->weight,
                           table.add(u.grade_->degree, v.grade_->degree)};
  }
  Word word;
  for (const auto& [a, ca] : u.terms_) {
    for (const auto& [b, cb] : v.terms_) {
      word.assign(a.begin(), a.end());
      word.insert(word.end(), b.begin(), b.end());
      product.add_term(word, ca * cb);
    }
  }
  return product;
}

FreeAlgebraElement super_commutator(const FreeAlgebraElement& u,
                                    const FreeAlgebraElement& v,
                                    const BicharacterTable& table) {
  if (!u.is_homogeneous() || !v.is_homogeneous()) {
    throw InvalidInput("super_commutator needs homogeneous arguments");
  }
  if (u.is_zero() || v.is_zero()) return {};
  const int sign = table.gamma(u.grade()->degree, v.grade()->degree);
  FreeAlgebraElement result = multiply(u, v, table);
  FreeAlgebraElement swapped = multiply(v, u, table);
  if (sign == 1) result -= swapped;
  else result += swapped;
  return result;
}

}  // namespace colorlie
