#include <colorlie/echelon.hpp>
#include <colorlie/errors.hpp>
#include <colorlie/oracle.hpp>

#include <algorithm>
#include <map>
#include <random>

namespace colorlie {

namespace {

// Number of words of weight n over the alphabet, by dynamic programming.
Integer words_of_weight(const GradedAlphabet& alphabet, unsigned n) {
  std::vector<Integer> count(n + 1, Integer(0));
  count[0] = 1;
  for (unsigned w = 1; w <= n; ++w) {
    for (const Generator& g : alphabet.generators()) {
      if (g.weight <= w) count[w] += count[w - g.weight];
    }
  }
  return count[n];
}

Integer power_count(std::uint64_t k, unsigned n) {
  return ipow(Integer(static_cast<unsigned long>(k)), n);
}

}  // namespace

FreeLieRealization::FreeLieRealization(GradedAlphabet alphabet,
                                       OracleLimits limits)
    : alphabet_(std::move(alphabet)), limits_(limits), bases_(1) {}

const std::vector<FreeAlgebraElement>& FreeLieRealization::basis(unsigned weight) {
  if (weight == 0) throw InvalidInput("Lie components start at weight 1");
  while (bases_.size() <= weight) {
    const unsigned n = static_cast<unsigned>(bases_.size());
    if (words_of_weight(alphabet_, n) > limits_.max_words) {
      throw TooLarge("weight " + std::to_string(n) + " has more than " +
                     std::to_string(limits_.max_words) + " words");
    }
    const BicharacterTable& table = alphabet_.table();
    EchelonBasis echelon;
    std::vector<FreeAlgebraElement> basis;
    const auto offer = [&](FreeAlgebraElement candidate) {
      if (echelon.insert(candidate)) basis.push_back(std::move(candidate));
    };
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      if (alphabet_[i].weight == n) {
        offer(FreeAlgebraElement::generator(alphabet_, i));
      }
    }
    for (unsigned k = 1; k < n; ++k) {
      for (const FreeAlgebraElement& u : bases_[k]) {
        for (const FreeAlgebraElement& v : bases_[n - k]) {
          offer(super_commutator(u, v, table));
        }
      }
    }
    bases_.push_back(std::move(basis));
  }
  return bases_[weight];
}

LieSpanResult FreeLieRealization::span(unsigned weight) {
  LieSpanResult result;
  for (const FreeAlgebraElement& e : basis(weight)) {
    ++result.dimension;
    if (alphabet_.table().is_even(e.grade()->degree)) ++result.even;
    else ++result.odd;
  }
  return result;
}

LieSpanResult lie_span_dimension(const GradedAlphabet& alphabet, unsigned n,
                                 OracleLimits limits) {
  if (n == 0) throw InvalidInput("lie_span_dimension: n must be >= 1");
  validate_bicharacter(alphabet.table());
  FreeLieRealization realization(alphabet, limits);
  return realization.span(n);
}

SignedDimensionSequence oracle_parity_split(const GradedAlphabet& alphabet,
                                            unsigned max_degree,
                                            OracleLimits limits) {
  validate_bicharacter(alphabet.table());
  FreeLieRealization realization(alphabet, limits);
  std::vector<Integer> even, odd;
  for (unsigned n = 1; n <= max_degree; ++n) {
    const LieSpanResult r = realization.span(n);
    even.emplace_back(static_cast<unsigned long>(r.even));
    odd.emplace_back(static_cast<unsigned long>(r.odd));
  }
  return {std::move(even), std::move(odd)};
}

JacobiReport verify_jacobi(const GradedAlphabet& alphabet, std::size_t trials,
                           unsigned max_degree, std::uint64_t seed,
                           OracleLimits limits) {
  validate_bicharacter(alphabet.table());
  const BicharacterTable& table = alphabet.table();
  FreeLieRealization realization(alphabet, limits);

  // (weight, G-degree) -> basis elements of that bidegree.
  std::vector<std::vector<FreeAlgebraElement>> classes;
  for (unsigned w = 1; w <= max_degree; ++w) {
    std::map<std::size_t, std::vector<FreeAlgebraElement>> by_degree;
    for (const FreeAlgebraElement& e : realization.basis(w)) {
      by_degree[e.grade()->degree].push_back(e);
    }
    for (auto& [degree, elements] : by_degree) classes.push_back(std::move(elements));
  }
  if (classes.empty()) throw InvalidInput("verify_jacobi: empty alphabet");

  std::mt19937_64 rng(seed);
  const auto pick = [&rng](std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
  };
  const auto random_element = [&]() {
    const auto& pool = classes[pick(classes.size())];
    FreeAlgebraElement x;
    const std::size_t terms = 1 + pick(std::min<std::size_t>(3, pool.size()));
    for (std::size_t i = 0; i < terms; ++i) {
      long num = static_cast<long>(pick(7)) - 3;
      if (num == 0) num = 1;
      const Rational c(num, static_cast<unsigned long>(1 + pick(3)));
      x += c * pool[pick(pool.size())];
    }
    if (x.is_zero()) x = pool.front();
    return x;
  };
  const auto bracket = [&table](const FreeAlgebraElement& a,
                                const FreeAlgebraElement& b) {
    return super_commutator(a, b, table);
  };
  const auto g = [&table](const FreeAlgebraElement& a, const FreeAlgebraElement& b) {
    return Rational(table.gamma(a.grade()->degree, b.grade()->degree));
  };

  JacobiReport report;
  report.seed = seed;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const FreeAlgebraElement x = random_element();
    const FreeAlgebraElement y = random_element();
    const FreeAlgebraElement z = random_element();

    const FreeAlgebraElement skew = bracket(x, y) + g(x, y) * bracket(y, x);
    if (!skew.is_zero()) {
      ++report.skew_failures;
      if (!report.witness) {
        report.witness = "skew-symmetry, trial " + std::to_string(t) +
                         ": x = " + x.format(alphabet) +
                         ", y = " + y.format(alphabet);
      }
    }

    const FreeAlgebraElement jacobi = g(z, x) * bracket(x, bracket(y, z)) +
                                      g(y, z) * bracket(z, bracket(x, y)) +
                                      g(x, y) * bracket(y, bracket(z, x));
    if (!jacobi.is_zero()) {
      ++report.jacobi_failures;
      if (!report.witness) {
        report.witness = "Jacobi identity, trial " + std::to_string(t) +
                         ": x = " + x.format(alphabet) + ", y = " +
                         y.format(alphabet) + ", z = " + z.format(alphabet);
      }
    }
  }
  return report;
}

std::vector<std::size_t> subalgebra_dimensions(
    std::span<const FreeAlgebraElement> generators,
    const BicharacterTable& table, unsigned max_weight, OracleLimits limits) {
  std::size_t letters = 0;
  for (const FreeAlgebraElement& gen : generators) {
    if (gen.is_zero()) continue;
    if (!gen.grade()) {
      throw InvalidInput("subalgebra generators must be homogeneous");
    }
    if (gen.grade()->weight == 0) {
      throw InvalidInput("subalgebra generators must have positive weight");
    }
    for (const auto& [word, c] : gen.terms()) {
      for (Letter l : word) letters = std::max<std::size_t>(letters, l + 1u);
    }
  }
  if (power_count(letters, max_weight) > limits.max_words) {
    throw TooLarge("subalgebra closure beyond " +
                   std::to_string(limits.max_words) + " words");
  }

  std::vector<std::vector<FreeAlgebraElement>> bases(max_weight + 1);
  std::vector<std::size_t> dims;
  for (unsigned w = 1; w <= max_weight; ++w) {
    EchelonBasis echelon;
    auto& basis = bases[w];
    const auto offer = [&](FreeAlgebraElement candidate) {
      if (echelon.insert(candidate)) basis.push_back(std::move(candidate));
    };
    for (const FreeAlgebraElement& gen : generators) {
      if (!gen.is_zero() && gen.grade()->weight == w) offer(gen);
    }
    for (unsigned k = 1; k < w; ++k) {
      for (const FreeAlgebraElement& u : bases[k]) {
        for (const FreeAlgebraElement& v : bases[w - k]) {
          offer(super_commutator(u, v, table));
        }
      }
    }
    dims.push_back(basis.size());
  }
  return dims;
}

std::size_t subalgebra_span_dimension(
    std::span<const FreeAlgebraElement> generators,
    const BicharacterTable& table, unsigned n, OracleLimits limits) {
  if (n == 0) throw InvalidInput("subalgebra_span_dimension: n must be >= 1");
  return subalgebra_dimensions(generators, table, n, limits).back();
}

Integer lyndon_count(unsigned k, unsigned n, OracleLimits limits) {
  if (k == 0 || n == 0) throw InvalidInput("lyndon_count: k and n must be >= 1");
  if (power_count(k, n) > limits.max_words) {
    throw TooLarge(std::to_string(k) + "^" + std::to_string(n) +
                   " words exceed the enumeration cap");
  }
  std::vector<unsigned> word(n, 0);
  Integer count = 0;
  const auto rotation_is_smaller_or_equal = [&](unsigned shift) {
    for (unsigned i = 0; i < n; ++i) {
      const unsigned a = word[(i + shift) % n];
      if (a != word[i]) return a < word[i];
    }
    return true;  // equal rotation: the word is periodic
  };
  while (true) {
    bool lyndon = true;
    for (unsigned shift = 1; shift < n && lyndon; ++shift) {
      if (rotation_is_smaller_or_equal(shift)) lyndon = false;
    }
    if (lyndon) ++count;
    unsigned pos = n;
    while (pos > 0 && word[pos - 1] == k - 1) word[--pos] = 0;
    if (pos == 0) break;
    ++word[pos - 1];
  }
  return count;
}

Integer pbw_count(const SignedDimensionSequence& dims,
                  std::optional<unsigned> exponent_cap, unsigned n) {
  if (n > dims.size()) {
    throw InvalidInput("pbw_count: degree " + std::to_string(n) +
                       " beyond the known dimensions");
  }
  // counts[d] = number of monomials of degree d in the elements seen so far.
  std::vector<Integer> counts(n + 1, Integer(0));
  counts[0] = 1;
  const auto element_count = [](const Integer& x) {
    if (x > 1'000'000) throw TooLarge("pbw_count: too many basis elements");
    return x.get_ui();
  };
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned long e = 0; e < element_count(dims.even(m)); ++e) {
      std::vector<Integer> next(n + 1, Integer(0));
      for (unsigned d = 0; d <= n; ++d) {
        for (unsigned s = 0; s * m <= d; ++s) {
          if (exponent_cap && s > *exponent_cap) break;
          next[d] += counts[d - s * m];
        }
      }
      counts = std::move(next);
    }
    for (unsigned long e = 0; e < element_count(dims.odd(m)); ++e) {
      std::vector<Integer> next = counts;
      for (unsigned d = m; d <= n; ++d) next[d] += counts[d - m];
      counts = std::move(next);
    }
  }
  return counts[n];
}

}  // namespace colorlie
