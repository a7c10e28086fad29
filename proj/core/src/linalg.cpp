#include "syzstab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace syzstab::linalg {

namespace {

// a*x - b*y over sparse vectors.
SparseVector combine(const Integer& a, const SparseVector& x, const Integer& b, const SparseVector& y) {
  SparseVector out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.emplace_back(i->first, a * i->second);
      ++i;
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, -b * j->second);
      ++j;
    } else {
      Integer v = a * i->second - b * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void makePrimitive(SparseVector& v) {
  if (v.empty()) return;
  Integer g = 0;
  for (const auto& [_, c] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& [_, c] : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntMatrix scaleRows(const RatMatrix& m) {
  IntMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Integer l = 1;
    for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> r;
    r.reserve(row.size());
    for (const auto& q : row) r.push_back(Integer(q.get_num() * (l / q.get_den())));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::size_t bareissRank(IntMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::size_t rank(const RatMatrix& m) { return bareissRank(scaleRows(m)); }

std::vector<std::vector<Rational>> nullspace(const RatMatrix& input, std::size_t columns) {
  RatMatrix m = input;
  for (const auto& row : m)
    if (row.size() != columns) throw std::invalid_argument("ragged matrix");
  std::vector<std::size_t> pivotCols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < columns; ++j) m[i][j] -= f * m[r][j];
    }
    pivotCols.push_back(c);
    ++r;
  }
  std::vector<bool> isPivot(columns, false);
  for (auto c : pivotCols) isPivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (isPivot[f]) continue;
    std::vector<Rational> v(columns, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivotCols.size(); ++i) v[pivotCols[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

IncrementalEchelon::IncrementalEchelon(std::size_t dimension) : pivotOf_(dimension) {}

bool IncrementalEchelon::insert(SparseVector v) {
  while (!v.empty()) {
    const std::size_t lead = v.front().first;
    if (lead >= pivotOf_.size()) throw std::out_of_range("vector index beyond echelon dimension");
    const auto slot = pivotOf_[lead];
    if (!slot) {
      makePrimitive(v);
      pivotOf_[lead] = basis_.size();
      basis_.push_back(std::move(v));
      return true;
    }
    const SparseVector& b = basis_[*slot];
    Integer g;
    mpz_gcd(g.get_mpz_t(), b.front().second.get_mpz_t(), v.front().second.get_mpz_t());
    const Integer a = b.front().second / g;
    const Integer c = v.front().second / g;
    v = combine(a, v, c, b);
    makePrimitive(v);
  }
  return false;
}

}  // namespace syzstab::linalg
