#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "syzstab/error.hpp"
#include "syzstab/monomial_stability.hpp"
#include "syzstab/sections.hpp"

using namespace syzstab;

namespace {

Polynomial mono(std::initializer_list<long> e, long c = 1) { return Polynomial::fromMonomial(Monomial(e), c); }

// X^10, Y^10, Z^10 and P = X^9Y + X^9Z + Y^9X + Y^9Z + Z^9X + Z^9Y.
PolyFamily tenthPowers() {
  const Polynomial P = mono({9, 1, 0}) + mono({9, 0, 1}) + mono({1, 9, 0}) + mono({0, 9, 1}) + mono({1, 0, 9}) +
                       mono({0, 1, 9});
  return PolyFamily({mono({10, 0, 0}), mono({0, 10, 0}), mono({0, 0, 10}), P});
}

// Nullity of (+) R_{m-d_i} -> R_m assembled directly in the test.
std::size_t referenceSectionDim(const PolyFamily& f, long m) {
  const std::size_t vars = f.variables();
  const auto target = monomialsOfDegree(vars, m);
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : f)
    for (const auto& a : monomialsOfDegree(vars, m - g.degree())) {
      std::vector<Rational> row(target.size());
      const Polynomial product = g * a;
      for (const auto& t : product.terms()) {
        const auto it = std::find(target.begin(), target.end(), t.monomial);
        row[static_cast<std::size_t>(it - target.begin())] = t.coefficient;
      }
      rows.push_back(std::move(row));
    }
  if (target.empty()) return rows.size();
  return rows.size() - oracle::gaussRank(rows);
}

}  // namespace

TEST(MonomialBasis, Fixtures) {
  EXPECT_EQ(monomialBasis(2, 0), (std::vector<Monomial>{{0, 0, 0}}));
  EXPECT_TRUE(monomialBasis(2, -1).empty());
  EXPECT_EQ(monomialBasis(1, 3).size(), 4u);
}

TEST(MonomialBasis, IndexMatchesPosition) {
  for (long N = 0; N <= 3; ++N)
    for (long m = 0; m <= 6; ++m) {
      const auto basis = monomialBasis(N, m);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<long> e;
        for (const auto& x : basis[i].exponents()) e.push_back(x.get_si());
        EXPECT_EQ(monomialIndex(e), i);
      }
    }
}

TEST(SectionDim, Fixtures) {
  EXPECT_EQ(syzygySectionDim(PolyFamily({mono({1, 0}), mono({0, 1})}), 2), 1u);
  EXPECT_EQ(syzygySectionDim(PolyFamily({mono({1, 0}), mono({0, 1})}), 1), 0u);
  const PolyFamily open({mono({3, 0, 0}), mono({1, 2, 0}), mono({0, 2, 1})});
  EXPECT_GE(syzygySectionDim(open, 4), 1u);
  EXPECT_EQ(syzygySectionDim(SectionQuery{open, 4}), syzygySectionDim(open, 4));
}

TEST(SectionDim, TenthPowersAtTwist13) {
  const PolyFamily f = tenthPowers();
  const std::size_t dim = syzygySectionDim(f, 13);
  EXPECT_GE(dim, 1u);
  EXPECT_EQ(dim, referenceSectionDim(f, 13));
  EXPECT_EQ(syzygySectionDim(f, 12), referenceSectionDim(f, 12));
}

TEST(SectionBasis, VectorsAreSyzygies) {
  const PolyFamily open({mono({3, 0, 0}), mono({1, 2, 0}), mono({0, 2, 1})});
  const auto basis = syzygySectionBasis(open, 4);
  ASSERT_EQ(basis.size(), syzygySectionDim(open, 4));
  for (const auto& tuple : basis) {
    Polynomial sum(3, 4);
    for (std::size_t i = 0; i < tuple.size(); ++i) sum = sum + tuple[i] * open[i];
    EXPECT_TRUE(sum.isZero());
  }
  // (0, Z, -X) lies in the span: it is the only syzygy in degree 4.
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_TRUE(basis[0][0].isZero());
  EXPECT_EQ(basis[0][1].monic(), mono({0, 0, 1}));
  EXPECT_EQ(basis[0][2].monic(), mono({1, 0, 0}));
}

TEST(MinSectionDegree, Fixtures) {
  EXPECT_EQ(minSectionDegreeMonomial(MonomialFamily({{3, 0, 0}, {1, 2, 0}, {0, 2, 1}})), 4);
  EXPECT_EQ(minSectionDegreeMonomial(MonomialFamily({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), 2);
  for (long d = 1; d <= 6; ++d)
    EXPECT_EQ(minSectionDegreeMonomial(MonomialFamily({{d, 0, 0}, {0, d, 0}, {0, 0, d}})), 2 * d);
  EXPECT_EQ(firstSectionDegree(PolyFamily(MonomialFamily({{3, 0, 0}, {1, 2, 0}, {0, 2, 1}})), 0, 10), 4);
  EXPECT_EQ(firstSectionDegree(PolyFamily(MonomialFamily({{3, 0, 0}, {1, 2, 0}, {0, 2, 1}})), 0, 3), std::nullopt);
}

TEST(CommonFactor, PolynomialGcd) {
  const Polynomial x = mono({1, 0}), y = mono({0, 1});
  const Polynomial a = (x + y) * (x - y);
  const Polynomial b = (x + y) * (x + y) * Rational(3);
  EXPECT_EQ(commonFactor(PolyFamily({a, b})), x + y);
  EXPECT_EQ(commonFactor(PolyFamily({mono({2, 0}), mono({0, 2})})), mono({0, 0}));
  EXPECT_EQ(commonFactor(PolyFamily({mono({2, 1}), mono({1, 2}), mono({1, 1}, 5)})), mono({1, 1}));
}

TEST(Primality, PolynomialFamilies) {
  EXPECT_TRUE(isPrimary(tenthPowers()));
  EXPECT_FALSE(isPrimary(PolyFamily(MonomialFamily({{3, 0, 0}, {1, 2, 0}, {0, 2, 1}}))));
  EXPECT_TRUE(isPrimary(PolyFamily(MonomialFamily({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}))));
}

TEST(Rank2Verdict, Fixtures) {
  const auto v = rank2Verdict(mono({2, 0, 0}), mono({0, 2, 0}), mono({0, 0, 2}));
  EXPECT_TRUE(v.semistable());
  const auto u = rank2Verdict(mono({3, 0, 0}), mono({1, 2, 0}), mono({0, 2, 1}));
  EXPECT_EQ(u.kind, VerdictKind::Unstable);
  ASSERT_TRUE(u.section);
  EXPECT_EQ(u.section->twist, 4);
  // Regular sequences with d3 <= d1 + d2 are semistable.
  for (long a = 1; a <= 4; ++a)
    for (long b = a; b <= 4; ++b)
      for (long c = b; c <= a + b; ++c) {
        const Polynomial f1 = mono({a, 0, 0}) + mono({0, a, 0});
        EXPECT_TRUE(rank2Verdict(f1, mono({0, b, 0}), mono({0, 0, c})).semistable()) << a << b << c;
      }
}

TEST(Rank3Verdict, Fixtures) {
  const PolyFamily f = tenthPowers();
  const auto v = rank3Verdict(f[0], f[1], f[2], f[3]);
  EXPECT_EQ(v.kind, VerdictKind::Unstable);
  ASSERT_TRUE(v.section);
  EXPECT_EQ(v.section->twist, 13);
  EXPECT_TRUE(rank3Verdict(mono({3, 0, 0}), mono({0, 3, 0}), mono({0, 0, 3}), mono({2, 1, 0})).semistable());
  EXPECT_EQ(rank3Verdict(mono({3, 0, 0}), mono({0, 3, 0}), mono({0, 0, 3}), mono({2, 2, 1})).kind,
            VerdictKind::Inconclusive);
  EXPECT_THROW(rank3Verdict(mono({1, 0}), mono({0, 1}), mono({1, 0}, 2), mono({0, 1}, 2)), PreconditionError);
}

TEST(Property, MonomialSectionsMatchCounting) {
  oracle::FamilyGen gen(41);
  for (int trial = 0; trial < 150; ++trial) {
    const auto exps = gen.family(static_cast<std::size_t>(gen.uniform(2, 5)),
                                 static_cast<std::size_t>(gen.uniform(2, 3)), 4, false);
    if (exps.size() < 2) continue;
    const PolyFamily f(oracle::family(exps));
    for (long m = 0; m <= 9; ++m) {
      const auto dims = sectionMap(f, m);
      ASSERT_EQ(Integer(static_cast<unsigned long>(dims.nullity)), oracle::monomialSyzygyDim(exps, m));
      EXPECT_EQ(dims.rank + dims.nullity, dims.domain);
    }
  }
}

TEST(Property, FastPathMatchesNullityScan) {
  oracle::FamilyGen gen(43);
  for (int trial = 0; trial < 200; ++trial) {
    const auto exps = gen.family(static_cast<std::size_t>(gen.uniform(2, 6)),
                                 static_cast<std::size_t>(gen.uniform(1, 3)), 6, false);
    if (exps.size() < 2) continue;
    const auto mf = oracle::family(exps);
    const PolyFamily f(mf);
    long m = 0;
    while (syzygySectionDim(f, m) == 0) ++m;
    EXPECT_EQ(minSectionDegreeMonomial(mf), m);
  }
}

TEST(Property, KoszulFloorForCoprimeMonomials) {
  oracle::FamilyGen gen(47);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(2, 4));
    std::vector<Monomial> ms;
    std::vector<long> degs;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Integer> e(n, 0);
      e[i] = gen.uniform(1, 5);
      degs.push_back(e[i].get_si());
      ms.emplace_back(std::move(e));
    }
    long floor = 1000;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) floor = std::min(floor, degs[i] + degs[j]);
    EXPECT_EQ(minSectionDegreeMonomial(MonomialFamily(ms)), floor);
    EXPECT_EQ(firstSectionDegree(PolyFamily(MonomialFamily(ms)), 0, 20), floor);
  }
}

TEST(Property, SectionDimensionMonotone) {
  oracle::FamilyGen gen(53);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t vars = static_cast<std::size_t>(gen.uniform(2, 3));
    std::vector<Polynomial> members;
    for (int i = 0; i < gen.uniform(2, 4); ++i) {
      const long d = gen.uniform(1, 3);
      std::vector<Term> terms;
      for (const auto& m : monomialsOfDegree(vars, d))
        if (gen.uniform(0, 2) == 0) terms.push_back({Rational(gen.uniform(1, 5)), m});
      if (terms.empty()) terms.push_back({Rational(1), Monomial::purePower(vars, 0, d)});
      members.emplace_back(vars, std::move(terms));
    }
    const PolyFamily f(members);
    std::size_t previous = 0;
    for (long m = 0; m <= 7; ++m) {
      const std::size_t dim = syzygySectionDim(f, m);
      EXPECT_GE(dim, previous);
      EXPECT_EQ(dim, referenceSectionDim(f, m));
      previous = dim;
    }
  }
}

TEST(Property, LowRankCriteriaAgreeWithMonomialVerdict) {
  oracle::FamilyGen gen(59);
  int decided = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(3, 4));
    const auto exps = gen.family(n, 3, 4, true);
    const auto mf = oracle::family(exps);
    const PolyFamily f(mf);
    const auto expected = verdict(mf);
    if (n == 3) {
      EXPECT_EQ(rank2Verdict(f[0], f[1], f[2]).kind, expected.kind) << trial;
      continue;
    }
    const auto v = rank3Verdict(f[0], f[1], f[2], f[3]);
    if (v.kind == VerdictKind::Inconclusive) continue;
    ++decided;
    EXPECT_EQ(v.semistable(), expected.semistable()) << trial;
    if (v.kind == VerdictKind::Unstable) EXPECT_EQ(expected.kind, VerdictKind::Unstable);
  }
  EXPECT_GT(decided, 0);
}
