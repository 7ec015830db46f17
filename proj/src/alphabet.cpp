#include <colorlie/alphabet.hpp>
#include <colorlie/errors.hpp>

#include <set>

namespace colorlie {

GradedAlphabet::GradedAlphabet(BicharacterTable table,
                               std::vector<Generator> generators)
    : table_(std::move(table)), generators_(std::move(generators)) {
  if (generators_.size() > 255) {
    throw TooLarge("alphabets are limited to 255 generators");
  }
  std::set<std::string> labels;
  for (const Generator& g : generators_) {
    if (g.weight == 0) {
      throw InvalidInput("generator '" + g.label + "' has weight 0");
    }
    if (!labels.insert(g.label).second) {
      throw InvalidInput("duplicate generator label '" + g.label + "'");
    }
    degree_index_.push_back(table_.index_of(g.degree));
  }
}

GradedAlphabet GradedAlphabet::free_superalgebra(unsigned even, unsigned odd) {
  std::vector<Generator> gens;
  for (unsigned i = 1; i <= even; ++i) {
    gens.push_back({"x" + std::to_string(i), 1, {0}});
  }
  for (unsigned i = 1; i <= odd; ++i) {
    gens.push_back({odd == 1 ? std::string("y") : "y" + std::to_string(i), 1,
                    {1}});
  }
  return {BicharacterTable::super(), std::move(gens)};
}

GradedAlphabet GradedAlphabet::even_weighted(std::span<const unsigned> weights) {
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    gens.push_back({"x" + std::to_string(i + 1), weights[i], {}});
  }
  return {BicharacterTable::trivial(), std::move(gens)};
}

std::size_t GradedAlphabet::even_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < size(); ++i) count += is_even(i) ? 1 : 0;
  return count;
}

std::size_t GradedAlphabet::odd_count() const { return size() - even_count(); }

}  // namespace colorlie
