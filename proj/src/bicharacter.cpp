#include <colorlie/bicharacter.hpp>
#include <colorlie/errors.hpp>

#include <sstream>

namespace colorlie {

namespace {

std::size_t group_order(const std::vector<unsigned>& moduli) {
  std::size_t order = 1;
  for (unsigned m : moduli) {
    if (m == 0) throw InvalidInput("cyclic factor of order zero");
    order *= m;
    if (order > 4096) throw TooLarge("grading group larger than 4096 elements");
  }
  return order;
}

std::int8_t sign_value(int v) {
  if (v != 1 && v != -1) {
    throw InvalidInput("bicharacter values must be +1 or -1, got " +
                       std::to_string(v));
  }
  return static_cast<std::int8_t>(v);
}

}  // namespace

BicharacterTable::BicharacterTable(std::vector<unsigned> moduli,
                                   std::vector<std::int8_t> values)
    : moduli_(std::move(moduli)),
      order_(group_order(moduli_)),
      values_(std::move(values)) {
  if (values_.size() != order_ * order_) {
    throw InvalidInput("bicharacter table needs |G|^2 = " +
                       std::to_string(order_ * order_) + " values");
  }
}

BicharacterTable BicharacterTable::trivial() { return {{}, {1}}; }

BicharacterTable BicharacterTable::super() {
  return from_generators({2}, {{-1}});
}

BicharacterTable BicharacterTable::from_generators(
    std::vector<unsigned> moduli,
    const std::vector<std::vector<int>>& gamma_on_generators) {
  const std::size_t rank = moduli.size();
  if (gamma_on_generators.size() != rank) {
    throw InvalidInput("gamma_on_generators must be a " +
                       std::to_string(rank) + "x" + std::to_string(rank) +
                       " matrix");
  }
  for (const auto& row : gamma_on_generators) {
    if (row.size() != rank) {
      throw InvalidInput("gamma_on_generators rows must have length " +
                         std::to_string(rank));
    }
    for (int v : row) sign_value(v);
  }

  const std::size_t order = group_order(moduli);
  BicharacterTable shape(moduli, std::vector<std::int8_t>(order * order, 1));
  std::vector<std::int8_t> values(order * order, 1);
  for (std::size_t f = 0; f < order; ++f) {
    const GroupElement fe = shape.element(f);
    for (std::size_t g = 0; g < order; ++g) {
      const GroupElement ge = shape.element(g);
      int sign = 1;
      for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = 0; j < rank; ++j) {
          if (gamma_on_generators[i][j] == -1 && (fe[i] * ge[j]) % 2 == 1) {
            sign = -sign;
          }
        }
      }
      values[f * order + g] = static_cast<std::int8_t>(sign);
    }
  }
  return {std::move(moduli), std::move(values)};
}

BicharacterTable BicharacterTable::from_values(std::vector<unsigned> moduli,
                                               std::vector<int> values) {
  std::vector<std::int8_t> signs;
  signs.reserve(values.size());
  for (int v : values) signs.push_back(sign_value(v));
  return {std::move(moduli), std::move(signs)};
}

std::size_t BicharacterTable::index_of(const GroupElement& g) const {
  if (g.size() != moduli_.size()) {
    throw InvalidInput("group element has " + std::to_string(g.size()) +
                       " components, expected " +
                       std::to_string(moduli_.size()));
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (g[i] >= moduli_[i]) {
      throw InvalidInput("residue " + std::to_string(g[i]) +
                         " out of range for Z_" + std::to_string(moduli_[i]));
    }
    index = index * moduli_[i] + g[i];
  }
  return index;
}

GroupElement BicharacterTable::element(std::size_t index) const {
  GroupElement g(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    g[i] = static_cast<unsigned>(index % moduli_[i]);
    index /= moduli_[i];
  }
  return g;
}

std::size_t BicharacterTable::add(std::size_t f, std::size_t g) const {
  GroupElement a = element(f);
  const GroupElement b = element(g);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % moduli_[i];
  return index_of(a);
}

std::string BicharacterTable::format(std::size_t g) const {
  std::ostringstream os;
  os << '(';
  const GroupElement e = element(g);
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ')';
  return os.str();
}

BicharacterReport validate_bicharacter(const BicharacterTable& table) {
  const std::size_t n = table.order();
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      if (table.gamma(f, g) * table.gamma(g, f) != 1) {
        throw InvalidBicharacter("skew-symmetry fails: gamma(" +
                                 table.format(f) + ", " + table.format(g) +
                                 ") gamma(" + table.format(g) + ", " +
                                 table.format(f) + ") != 1");
      }
      for (std::size_t h = 0; h < n; ++h) {
        const std::size_t gh = table.add(g, h);
        if (table.gamma(f, gh) != table.gamma(f, g) * table.gamma(f, h)) {
          throw InvalidBicharacter(
              "bimultiplicativity fails in the second argument at (f, g, h) = (" +
              table.format(f) + ", " + table.format(g) + ", " +
              table.format(h) + ")");
        }
        if (table.gamma(gh, f) != table.gamma(g, f) * table.gamma(h, f)) {
          throw InvalidBicharacter(
              "bimultiplicativity fails in the first argument at (f, g, h) = (" +
              table.format(f) + ", " + table.format(g) + ", " +
              table.format(h) + ")");
        }
      }
    }
  }

  BicharacterReport report;
  std::vector<bool> even(n);
  for (std::size_t g = 0; g < n; ++g) {
    even[g] = table.is_even(g);
    (even[g] ? report.even_part : report.odd_part).push_back(table.element(g));
  }
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      if (even[f] && even[g] && !even[table.add(f, g)]) {
        throw InvalidBicharacter("G_+ is not closed under the group operation");
      }
    }
  }
  report.even_index = n / report.even_part.size();
  if (report.even_index > 2) {
    throw InvalidBicharacter("[G : G_+] = " +
                             std::to_string(report.even_index) + " exceeds 2");
  }
  return report;
}

}  // namespace colorlie
