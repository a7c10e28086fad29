#include "syzstab/sections.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "syzstab/error.hpp"
#include "syzstab/linalg.hpp"

namespace syzstab {

namespace {

using Exponents = std::vector<long>;

long smallBinomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  auto v = toLong(binomial(n, k));
  if (!v) throw PreconditionError("degree-range", "monomial basis too large");
  return *v;
}

long basisSize(std::size_t variables, long m) {
  if (m < 0) return 0;
  return smallBinomial(m + static_cast<long>(variables) - 1, static_cast<long>(variables) - 1);
}

void forEachExponent(std::size_t variables, long m, const auto& visit) {
  if (m < 0) return;
  Exponents e(variables, 0);
  auto fill = [&](auto&& self, std::size_t j, long remaining) -> void {
    if (j + 1 == variables) {
      e[j] = remaining;
      visit(e);
      return;
    }
    for (long a = remaining; a >= 0; --a) {
      e[j] = a;
      self(self, j + 1, remaining - a);
    }
  };
  fill(fill, 0, m);
}

Exponents toSmall(const Monomial& m) {
  Exponents e;
  e.reserve(m.variables());
  for (const auto& x : m.exponents()) {
    auto v = toLong(x);
    if (!v) throw PreconditionError("degree-range", "exponent exceeds the machine range");
    e.push_back(*v);
  }
  return e;
}

// A member with integer coefficients (scaled by the lcm of its denominators).
struct ScaledMember {
  long degree;
  std::vector<std::pair<Exponents, Integer>> terms;
};

std::vector<ScaledMember> scaleFamily(const PolyFamily& family) {
  std::vector<ScaledMember> out;
  out.reserve(family.size());
  for (const auto& p : family) {
    const Integer l = p.denominatorLcm();
    ScaledMember s{p.degree(), {}};
    for (const auto& t : p.terms())
      s.terms.emplace_back(toSmall(t.monomial), Integer(t.coefficient.get_num() * (l / t.coefficient.get_den())));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Polynomial> pairFamily(const Polynomial& a, const Polynomial& b) { return {a, b}; }

// gcd of two nonzero forms from their lowest-degree syzygy (q_a, q_b):
// q_a = b / h up to a scalar, so h = b / q_a.
Polynomial gcdPair(const Polynomial& a, const Polynomial& b) {
  const Polynomial one = Polynomial::fromMonomial(Monomial::one(a.variables()));
  if (a.degree() == 0 || b.degree() == 0) return one;
  const PolyFamily pair(pairFamily(a, b));
  const auto m0 = firstSectionDegree(pair, std::max(a.degree(), b.degree()), a.degree() + b.degree());
  if (!m0) throw std::logic_error("Koszul syzygy missing");
  const auto basis = syzygySectionBasis(pair, *m0);
  if (basis.size() != 1) throw std::logic_error("lowest syzygy of two forms is not unique");
  return divideExact(b, basis.front()[0]).monic();
}

StabilityVerdict sectionVerdict(VerdictKind kind, long twist, std::size_t dim, std::string note) {
  StabilityVerdict v;
  v.kind = kind;
  v.section = SectionWitness{twist, Integer(static_cast<unsigned long>(dim)), Slope(-twist)};
  v.notes.push_back(std::move(note));
  return v;
}

void requireRing(const std::vector<Polynomial>& fs) {
  for (const auto& f : fs) {
    if (f.isZero()) throw PreconditionError("nonzero", "zero polynomial");
    if (f.variables() != fs.front().variables())
      throw PreconditionError("variable-count", "polynomials live in different rings");
  }
}

}  // namespace

std::vector<Monomial> monomialBasis(long N, long m) {
  if (N < 0) throw PreconditionError("variable-count", "need N >= 0");
  return monomialsOfDegree(static_cast<std::size_t>(N + 1), m);
}

std::size_t monomialIndex(std::span<const long> e) {
  const long V = static_cast<long>(e.size());
  long remaining = std::accumulate(e.begin(), e.end(), 0L);
  long rank = 0;
  for (long j = 0; j + 1 < V; ++j) {
    // Monomials sharing the prefix but with a larger j-th exponent.
    const long larger = remaining - e[static_cast<std::size_t>(j)];
    const long k = V - j - 1;
    if (larger > 0) rank += smallBinomial(larger - 1 + k, k);
    remaining -= e[static_cast<std::size_t>(j)];
  }
  return static_cast<std::size_t>(rank);
}

SectionMapDims sectionMap(const PolyFamily& family, long twist) {
  const std::size_t V = family.variables();
  const auto members = scaleFamily(family);
  SectionMapDims dims;
  dims.codomain = static_cast<std::size_t>(basisSize(V, twist));
  linalg::IncrementalEchelon echelon(dims.codomain);
  Exponents product(V);
  for (const auto& f : members) {
    const long shift = twist - f.degree;
    forEachExponent(V, shift, [&](const Exponents& u) {
      linalg::SparseVector column;
      column.reserve(f.terms.size());
      for (const auto& [e, c] : f.terms) {
        for (std::size_t j = 0; j < V; ++j) product[j] = e[j] + u[j];
        column.emplace_back(monomialIndex(product), c);
      }
      std::sort(column.begin(), column.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      ++dims.domain;
      echelon.insert(std::move(column));
    });
  }
  dims.rank = echelon.rank();
  dims.nullity = dims.domain - dims.rank;
  return dims;
}

std::size_t syzygySectionDim(const PolyFamily& family, long twist) { return sectionMap(family, twist).nullity; }

std::size_t syzygySectionDim(const SectionQuery& query) { return syzygySectionDim(query.family, query.twist); }

std::vector<std::vector<Polynomial>> syzygySectionBasis(const PolyFamily& family, long twist) {
  const std::size_t V = family.variables();
  const std::size_t rows = static_cast<std::size_t>(basisSize(V, twist));
  struct Column {
    std::size_t member;
    Exponents shift;
  };
  std::vector<Column> columns;
  for (std::size_t i = 0; i < family.size(); ++i)
    forEachExponent(V, twist - family[i].degree(), [&](const Exponents& u) { columns.push_back({i, u}); });

  linalg::RatMatrix m(rows, std::vector<Rational>(columns.size(), Rational(0)));
  Exponents product(V);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& t : family[columns[c].member].terms()) {
      const Exponents e = toSmall(t.monomial);
      for (std::size_t j = 0; j < V; ++j) product[j] = e[j] + columns[c].shift[j];
      m[monomialIndex(product)][c] += t.coefficient;
    }
  }

  std::vector<std::vector<Polynomial>> out;
  for (const auto& kernel : linalg::nullspace(m, columns.size())) {
    std::vector<Polynomial> tuple;
    for (std::size_t i = 0; i < family.size(); ++i) tuple.emplace_back(V, twist - family[i].degree());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (kernel[c] == 0) continue;
      std::vector<Integer> e(columns[c].shift.begin(), columns[c].shift.end());
      auto& a = tuple[columns[c].member];
      a = a + Polynomial::fromMonomial(Monomial(std::move(e)), kernel[c]);
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

std::optional<long> firstSectionDegree(const PolyFamily& family, long from, long upTo) {
  for (long m = std::max(from, 0L); m <= upTo; ++m)
    if (syzygySectionDim(family, m) > 0) return m;
  return std::nullopt;
}

long minSectionDegreeMonomial(const MonomialFamily& family) {
  std::optional<Integer> best;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      Integer d = join(family[i], family[j]).degree();
      if (!best || d < *best) best = std::move(d);
    }
  auto v = toLong(*best);
  if (!v) throw PreconditionError("degree-range", "lcm degree exceeds the machine range");
  return *v;
}

Polynomial commonFactor(const PolyFamily& family) {
  if (family.isMonomial()) {
    Monomial g = family[0].leading().monomial;
    for (const auto& f : family) g = meet(g, f.leading().monomial);
    return Polynomial::fromMonomial(g);
  }
  Polynomial h = family[0].monic();
  for (std::size_t i = 1; i < family.size() && h.degree() > 0; ++i) h = gcdPair(h, family[i]);
  return h;
}

bool isPrimary(const PolyFamily& family) {
  if (family.isMonomial()) {
    std::vector<Monomial> ms;
    for (const auto& f : family) ms.push_back(f.leading().monomial);
    return isPrimary(std::span<const Monomial>(ms));
  }
  // An ideal primary to the irrelevant ideal, generated in degrees <= D,
  // contains every form of degree (N+1)(D-1)+1; the converse is immediate.
  const auto degrees = family.degrees();
  const long D = *std::max_element(degrees.begin(), degrees.end());
  const long m = static_cast<long>(family.variables()) * (D - 1) + 1;
  const auto dims = sectionMap(family, m);
  return dims.rank == dims.codomain;
}

StabilityVerdict rank2Verdict(const Polynomial& f1, const Polynomial& f2, const Polynomial& f3) {
  const std::vector<Polynomial> fs{f1, f2, f3};
  requireRing(fs);
  const PolyFamily family(fs);
  const long dI = commonFactor(family).degree();
  const long sum = f1.degree() + f2.degree() + f3.degree();
  // deg Syz(m) = 2m + d_I - sum; sections with 2m <= sum - d_I matter.
  const long threshold = sum - dI;
  const long start = std::max(0L, std::min({f1.degree(), f2.degree(), f3.degree()}));
  const auto first = firstSectionDegree(family, start, threshold / 2);
  StabilityVerdict v;
  if (first) {
    const std::size_t dim = syzygySectionDim(family, *first);
    v = sectionVerdict(2 * *first < threshold ? VerdictKind::Unstable : VerdictKind::SemistableNotStable, *first,
                       dim, "rank-two-sections");
  } else {
    v.kind = VerdictKind::Stable;
    v.notes.emplace_back("rank-two-sections");
  }
  if (dI > 0) v.notes.emplace_back("common-factor-degree-" + std::to_string(dI));
  return v;
}

StabilityVerdict rank3Verdict(const Polynomial& f1, const Polynomial& f2, const Polynomial& f3,
                              const Polynomial& f4) {
  const std::vector<Polynomial> fs{f1, f2, f3, f4};
  requireRing(fs);
  if (f1.variables() != 3) throw PreconditionError("three-variables", "rank-three criterion needs K[X,Y,Z]");
  const PolyFamily family(fs);
  if (!isPrimary(family)) throw PreconditionError("primary", "rank-three criterion needs primary elements");

  std::vector<std::size_t> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return fs[a].degree() < fs[b].degree(); });
  const long d1 = fs[order[0]].degree(), d2 = fs[order[1]].degree(), d3 = fs[order[2]].degree(),
             d4 = fs[order[3]].degree();
  const long sum = d1 + d2 + d3 + d4;

  // deg Syz(m) = 3m - sum; scan 3m <= sum.
  const auto first = firstSectionDegree(family, std::max(0L, d1), sum / 3);
  if (first && 3 * *first < sum)
    return sectionVerdict(VerdictKind::Unstable, *first, syzygySectionDim(family, *first), "rank-three-sections");

  if (2 * d4 > d1 + d2 + d3) {
    StabilityVerdict v;
    v.kind = VerdictKind::Inconclusive;
    v.notes.emplace_back("rank-three-degree-hypothesis-fails");
    return v;
  }
  if (first)
    return sectionVerdict(VerdictKind::SemistableNotStable, *first, syzygySectionDim(family, *first),
                          "rank-three-sections");
  StabilityVerdict v;
  v.notes.emplace_back("rank-three-sections");
  if (2 * d4 == d1 + d2 + d3) {
    // Syz of the three lowest-degree members has slope -d_4 = mu.
    std::vector<std::size_t> idx{order[0], order[1], order[2]};
    std::sort(idx.begin(), idx.end());
    const PolyFamily sub(std::vector<Polynomial>{fs[idx[0]], fs[idx[1]], fs[idx[2]]});
    const long dJ = commonFactor(sub).degree();
    v.kind = VerdictKind::SemistableNotStable;
    v.witness = SubsetWitness{idx, Monomial::one(3), Integer(dJ), Slope(dJ - (d1 + d2 + d3), 2)};
    v.notes.emplace_back("rank-three-degree-equality");
    return v;
  }
  v.kind = VerdictKind::Stable;
  return v;
}

}  // namespace syzstab
