#include "syzstab/generic_line.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

#include "syzstab/error.hpp"

namespace syzstab {

namespace {

// Binary form as coefficients of U^k V^{deg-k}, k = 0..deg.
template <class Coeff>
std::vector<Coeff> multiplyBinary(const std::vector<Coeff>& p, const std::vector<Coeff>& q, const Coeff& zero) {
  std::vector<Coeff> out(p.size() + q.size() - 1, zero);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] = out[i + j] + p[i] * q[j];
  return out;
}

long requireEqualDegree(const PolyFamily& family) {
  const long d = family[0].degree();
  for (const auto& f : family)
    if (f.degree() != d) throw PreconditionError("equal-degree", "line restriction needs forms of one degree");
  return d;
}

long exponentAsLong(const Integer& e) {
  auto v = toLong(e);
  if (!v) throw PreconditionError("degree-range", "exponent exceeds the machine range");
  return *v;
}

// Symbolic coefficient p_{i,k}(a, b) as polynomials in a_0..a_N, b_0..b_N.
std::vector<std::vector<Polynomial>> symbolicRestriction(const PolyFamily& family, long d) {
  const std::size_t V = family.variables();
  const std::size_t W = 2 * V;
  auto variable = [&](std::size_t idx) {
    std::vector<Integer> e(W, 0);
    e[idx] = 1;
    return Polynomial::fromMonomial(Monomial(std::move(e)));
  };
  std::vector<std::vector<Polynomial>> rows;
  for (const auto& f : family) {
    std::vector<Polynomial> row(static_cast<std::size_t>(d) + 1, Polynomial(W, d));
    for (const auto& t : f.terms()) {
      std::vector<Polynomial> image{Polynomial::fromMonomial(Monomial::one(W), t.coefficient)};
      for (std::size_t j = 0; j < V; ++j) {
        const long e = exponentAsLong(t.monomial[j]);
        // a_j U + b_j V  ->  {b_j (coefficient of U^0), a_j (coefficient of U^1)}
        const std::vector<Polynomial> linear{variable(V + j), variable(j)};
        for (long s = 0; s < e; ++s) {
          const long deg = static_cast<long>(image.size());  // degree of the product so far + 1
          image = multiplyBinary(image, linear, Polynomial(W, deg));
        }
      }
      for (std::size_t k = 0; k < row.size(); ++k) row[k] = row[k] + image[k];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
  Rational total = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coefficient;
    for (std::size_t j = 0; j < point.size(); ++j) {
      const long e = exponentAsLong(t.monomial[j]);
      for (long s = 0; s < e; ++s) v *= point[j];
    }
    total += v;
  }
  return total;
}

// All n x n minors of the symbolic n x (d+1) matrix; returns a nonzero one if any.
std::optional<Polynomial> nonzeroMaximalMinor(const std::vector<std::vector<Polynomial>>& rows) {
  const std::size_t n = rows.size();
  const std::size_t cols = rows.front().size();
  const std::size_t W = rows.front().front().variables();
  const long d = rows.front().front().degree();
  // minors[mask] = det of the first popcount(mask) rows on the columns in mask.
  std::map<std::uint32_t, Polynomial> level{{0u, Polynomial::fromMonomial(Monomial::one(W))}};
  for (std::size_t r = 0; r < n; ++r) {
    std::map<std::uint32_t, Polynomial> next;
    for (const auto& [mask, minor] : level) {
      if (minor.isZero()) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        const std::uint32_t bit = 1u << c;
        if (mask & bit) continue;
        const std::uint32_t grown = mask | bit;
        // Expanding along row r: the new column sits at position popcount(grown below c).
        const int position = std::popcount(mask & (bit - 1));
        const bool negative = ((static_cast<int>(r) + position) % 2) != 0;
        Polynomial term = rows[r][c] * minor;
        if (negative) term = -term;
        auto it = next.find(grown);
        if (it == next.end())
          next.emplace(grown, term.isZero() ? Polynomial(W, d * static_cast<long>(r + 1)) : term);
        else
          it->second = it->second + term;
      }
    }
    level = std::move(next);
  }
  for (const auto& [_, minor] : level)
    if (!minor.isZero()) return minor;
  return std::nullopt;
}

std::vector<Rational> drawPoint(std::mt19937_64& rng, std::size_t count, std::uint64_t range) {
  std::vector<Rational> out;
  out.reserve(count);
  const std::uint64_t width = 2 * range + 1;
  for (std::size_t j = 0; j < count; ++j)
    out.emplace_back(static_cast<long>(rng() % width) - static_cast<long>(range));
  return out;
}

}  // namespace

LineMap::LineMap(std::vector<Rational> a, std::vector<Rational> b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size() || a_.empty()) throw PreconditionError("line-map", "coefficient vectors differ in length");
  if (!independent(a_, b_)) throw PreconditionError("line-map", "line map coefficients are proportional");
}

bool LineMap::independent(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] - a[j] * b[i] != 0) return true;
  return false;
}

linalg::RatMatrix restrictToLine(const PolyFamily& family, const LineMap& line) {
  if (line.variables() != family.variables())
    throw PreconditionError("variable-count", "line map and family have different variable counts");
  const long d = requireEqualDegree(family);
  const Rational zero = 0;
  linalg::RatMatrix rows;
  for (const auto& f : family) {
    std::vector<Rational> row(static_cast<std::size_t>(d) + 1, zero);
    for (const auto& t : f.terms()) {
      std::vector<Rational> image{t.coefficient};
      for (std::size_t j = 0; j < family.variables(); ++j) {
        const long e = exponentAsLong(t.monomial[j]);
        const std::vector<Rational> linear{line.b()[j], line.a()[j]};
        for (long s = 0; s < e; ++s) image = multiplyBinary(image, linear, zero);
      }
      for (std::size_t k = 0; k < row.size(); ++k) row[k] += image[k];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string_view toString(LineOutcome o) {
  switch (o) {
    case LineOutcome::CertifiedYes: return "CertifiedYes";
    case LineOutcome::ProbablyNo: return "ProbablyNo";
    case LineOutcome::CertifiedNo: return "CertifiedNo";
  }
  return "ProbablyNo";
}

LineTestResult lineIndependenceTest(const PolyFamily& family, const LineTestOptions& options) {
  const long d = requireEqualDegree(family);
  const std::size_t n = family.size();
  const std::size_t V = family.variables();
  LineTestResult result;
  if (n > static_cast<std::size_t>(d) + 1) {
    result.outcome = LineOutcome::CertifiedNo;
    result.method = "too-many-forms";
    return result;
  }

  std::mt19937_64 rng(options.seed);
  for (std::size_t t = 0; t < options.trials; ++t) {
    // Coordinates from {-R..R}, R = 3 doubling every 8 trials.
    const std::uint64_t range = std::uint64_t{3} << std::min<std::size_t>(t / 8, 40);
    auto a = drawPoint(rng, V, range);
    auto b = drawPoint(rng, V, range);
    if (!LineMap::independent(a, b)) continue;
    LineMap line(std::move(a), std::move(b));
    if (linalg::rank(restrictToLine(family, line)) == n) {
      result.outcome = LineOutcome::CertifiedYes;
      result.witness = std::move(line);
      result.trialsUsed = t;
      return result;
    }
  }
  result.trialsUsed = options.trials;
  if (!options.exhaustive) return result;

  if (n > kExhaustiveMaxForms || V > kExhaustiveMaxN + 1)
    throw PreconditionError("exhaustive-range", "symbolic minors are limited to n <= 5 forms and N <= 3");
  result.method = "minors";
  const auto minor = nonzeroMaximalMinor(symbolicRestriction(family, d));
  if (!minor) {
    result.outcome = LineOutcome::CertifiedNo;
    return result;
  }
  // A nonzero minor of total degree n*d vanishes on at most half of a grid
  // with 2nd+1 values per coordinate.
  const std::uint64_t range = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(std::max(d, 1L));
  for (;;) {
    auto point = drawPoint(rng, 2 * V, range);
    if (evaluate(*minor, point) == 0) continue;
    std::vector<Rational> a(point.begin(), point.begin() + static_cast<std::ptrdiff_t>(V));
    std::vector<Rational> b(point.begin() + static_cast<std::ptrdiff_t>(V), point.end());
    if (!LineMap::independent(a, b)) continue;
    LineMap line(std::move(a), std::move(b));
    if (linalg::rank(restrictToLine(family, line)) != n) continue;
    result.outcome = LineOutcome::CertifiedYes;
    result.witness = std::move(line);
    return result;
  }
}

}  // namespace syzstab
