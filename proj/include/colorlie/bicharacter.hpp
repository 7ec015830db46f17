#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace colorlie {

/// Residues of an element of Z_m1 x ... x Z_mk.
using GroupElement = std::vector<unsigned>;

/// A finite abelian group G = Z_m1 x ... x Z_mk with a {+1,-1}-valued map
/// gamma: G x G -> Q*. The full |G| x |G| table is stored so that invalid
/// tables can be represented and diagnosed; use validate_bicharacter()
/// before relying on the bicharacter axioms.
///
/// Elements are addressed either by residue vector or by their mixed-radix
/// index in [0, |G|).
class BicharacterTable {
 public:
  /// G = {1}, gamma = 1.
  static BicharacterTable trivial();

  /// G = Z_2 with gamma(i, j) = (-1)^(ij): ordinary Lie superalgebras.
  static BicharacterTable super();

  /// gamma determined by its values on pairs of the cyclic generators e_i,
  /// extended by gamma(g, h) = prod_{i,j} gamma(e_i, e_j)^(g_i h_j).
  static BicharacterTable from_generators(
      std::vector<unsigned> moduli,
      const std::vector<std::vector<int>>& gamma_on_generators);

  /// gamma given pointwise; values[index(f) * |G| + index(g)] = gamma(f, g).
  static BicharacterTable from_values(std::vector<unsigned> moduli,
                                      std::vector<int> values);

  std::span<const unsigned> moduli() const noexcept { return moduli_; }
  std::size_t order() const noexcept { return order_; }

  std::size_t index_of(const GroupElement& g) const;
  GroupElement element(std::size_t index) const;
  std::size_t identity() const noexcept { return 0; }

  std::size_t add(std::size_t f, std::size_t g) const;

  int gamma(std::size_t f, std::size_t g) const {
    return values_[f * order_ + g];
  }
  int gamma(const GroupElement& f, const GroupElement& g) const {
    return gamma(index_of(f), index_of(g));
  }

  /// g lies in G_+ (gamma(g, g) = 1).
  bool is_even(std::size_t g) const { return gamma(g, g) == 1; }

  std::string format(std::size_t g) const;

 private:
  BicharacterTable(std::vector<unsigned> moduli, std::vector<std::int8_t> values);

  std::vector<unsigned> moduli_;
  std::size_t order_ = 1;
  std::vector<std::int8_t> values_;
};

struct BicharacterReport {
  std::vector<GroupElement> even_part;  // G_+
  std::vector<GroupElement> odd_part;   // G_-
  std::size_t even_index = 1;           // [G : G_+]
};

/// Checks bimultiplicativity in both arguments and gamma(f,g) gamma(g,f) = 1
/// over all pairs and triples, then that G_+ is a subgroup of index <= 2.
/// Throws InvalidBicharacter naming the first failing triple.
BicharacterReport validate_bicharacter(const BicharacterTable& table);

}  // namespace colorlie
