#include <colorlie/echelon.hpp>

#include <algorithm>

namespace colorlie {

namespace {

using Row = std::vector<std::pair<std::uint32_t, Integer>>;

void make_primitive(Row& row) {
  if (row.empty()) return;
  Integer content = 0;
  for (const auto& [col, value] : row) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), value.get_mpz_t());
    if (content == 1) return;
  }
  for (auto& [col, value] : row) {
    mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), content.get_mpz_t());
  }
}

// a*lhs - b*rhs over sorted sparse rows, dropping zeros.
Row combine(const Row& lhs, const Integer& a, const Row& rhs, const Integer& b) {
  Row out;
  out.reserve(lhs.size() + rhs.size());
  std::size_t i = 0, j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < lhs.size() && lhs[i].first < rhs[j].first)) {
      out.emplace_back(lhs[i].first, a * lhs[i].second);
      ++i;
    } else if (i == lhs.size() || rhs[j].first < lhs[i].first) {
      out.emplace_back(rhs[j].first, -(b * rhs[j].second));
      ++j;
    } else {
      Integer value = a * lhs[i].second - b * rhs[j].second;
      if (value != 0) out.emplace_back(lhs[i].first, std::move(value));
      ++i;
      ++j;
    }
  }
  return out;
}

Row scale_to_integers(std::vector<std::pair<std::uint32_t, Rational>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  Integer denominator = 1;
  for (const auto& [col, q] : entries) {
    mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(),
            q.get_den_mpz_t());
  }
  Row row;
  row.reserve(entries.size());
  for (const auto& [col, q] : entries) {
    Integer value = q.get_num() * (denominator / q.get_den());
    row.emplace_back(col, std::move(value));
  }
  make_primitive(row);
  return row;
}

}  // namespace

EchelonBasis::Row EchelonBasis::to_row(const FreeAlgebraElement& v, bool assign,
                                       bool& known) {
  known = true;
  std::vector<std::pair<std::uint32_t, Rational>> entries;
  entries.reserve(v.size());
  for (const auto& [word, q] : v.terms()) {
    auto it = columns_.find(word);
    if (it == columns_.end()) {
      if (!assign) {
        known = false;
        return {};
      }
      it = columns_.emplace(word, static_cast<std::uint32_t>(columns_.size())).first;
    }
    entries.emplace_back(it->second, q);
  }
  return scale_to_integers(std::move(entries));
}

EchelonBasis::Row EchelonBasis::to_row_const(const FreeAlgebraElement& v,
                                             bool& known) const {
  known = true;
  std::vector<std::pair<std::uint32_t, Rational>> entries;
  for (const auto& [word, q] : v.terms()) {
    const auto it = columns_.find(word);
    if (it == columns_.end()) {
      known = false;
      return {};
    }
    entries.emplace_back(it->second, q);
  }
  return scale_to_integers(std::move(entries));
}

void EchelonBasis::reduce(Row& row) const {
  while (!row.empty()) {
    const auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) return;
    const Row& pivot = it->second;
    Integer g;
    mpz_gcd(g.get_mpz_t(), pivot.front().second.get_mpz_t(),
            row.front().second.get_mpz_t());
    const Integer a = pivot.front().second / g;
    const Integer b = row.front().second / g;
    row = combine(row, a, pivot, b);
    make_primitive(row);
  }
}

bool EchelonBasis::insert(const FreeAlgebraElement& v) {
  if (v.is_zero()) return false;
  bool known = true;
  Row row = to_row(v, true, known);
  reduce(row);
  if (row.empty()) return false;
  if (row.front().second < 0) {
    for (auto& [col, value] : row) value = -value;
  }
  const std::uint32_t lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
  return true;
}

bool EchelonBasis::contains(const FreeAlgebraElement& v) const {
  if (v.is_zero()) return true;
  bool known = true;
  Row row = to_row_const(v, known);
  if (!known) return false;
  reduce(row);
  return row.empty();
}

std::size_t rational_rank(std::span<const FreeAlgebraElement> elements) {
  EchelonBasis basis;
  for (const FreeAlgebraElement& e : elements) basis.insert(e);
  return basis.rank();
}

}  // namespace colorlie
