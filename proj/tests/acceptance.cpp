// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli/commands.hpp"
#include "support/oracles.hpp"
#include "syzstab/generic_line.hpp"
#include "syzstab/monomial_stability.hpp"
#include "syzstab/numeric_bounds.hpp"
#include "syzstab/search.hpp"
#include "syzstab/sections.hpp"

using namespace syzstab;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

nlohmann::json runJson(std::vector<std::string> args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  args.push_back("--json");
  if (cli::run(args, in, out, err) != 0) return nullptr;
  return nlohmann::json::parse(out.str());
}

std::string documentOf(const MonomialFamily& f) {
  nlohmann::json ms = nlohmann::json::array();
  for (const auto& m : f) {
    nlohmann::json e = nlohmann::json::array();
    for (const auto& x : m.exponents()) e.push_back(x.get_si());
    ms.push_back(e);
  }
  return nlohmann::json{{"variables", f.variables()}, {"monomials", ms}}.dump();
}

bool checkSemistable(const MonomialFamily& f) {
  const auto j = runJson({"check"}, documentOf(f));
  return !j.is_null() && j["verdict"]["semistable"].get<bool>();
}

Polynomial mono(std::initializer_list<long> e) { return Polynomial::fromMonomial(Monomial(e)); }

// 1. Worked families, exact.
Check workedFamilies() {
  Check c;
  const MonomialFamily a({{4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {1, 1, 2}});
  const MonomialFamily b({{4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {1, 0, 3}});
  c.require(verdict(a).semistable(), "{X^4,Y^4,Z^4,XYZ^2} semistable");
  c.require(fourMonomialCheck(4, 4, 4, Monomial{1, 1, 2}), "four-monomial check on XYZ^2");
  c.require(verdict(b).kind == VerdictKind::Unstable, "{X^4,Y^4,Z^4,XZ^3} unstable");
  c.require(!fourMonomialCheck(4, 4, 4, Monomial{1, 0, 3}), "four-monomial check on XZ^3");
  c.require(!fourMonomialCheck(3, 3, 3, Monomial{1, 2, 2}), "four-monomial check on XY^2Z^2");
  c.require(verdict(MonomialFamily({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 2, 2}})).kind == VerdictKind::Unstable,
            "{X^3,Y^3,Z^3,XY^2Z^2} unstable");

  const MonomialFamily sextics({{6, 0, 0}, {0, 6, 0}, {0, 0, 6}, {2, 2, 2}, {1, 2, 3}});
  const auto vSextics = verdict(sextics);
  c.require(vSextics.kind == VerdictKind::Unstable, "{X^6,Y^6,Z^6,X^2Y^2Z^2,XY^2Z^3} unstable");
  c.require(maxSlope(sextics).maxSlope == Slope(-7), "sextic family max slope -7");
  c.require(familySlope(sextics) == Slope(-30, 4), "sextic family slope -30/4");
  c.require(vSextics.witness && vSextics.witness->indices == std::vector<std::size_t>{3, 4}, "sextic family witness {4,5}");
  const MonomialFamily sexticsStable({{6, 0, 0}, {0, 6, 0}, {0, 0, 6}, {2, 2, 2}, {3, 0, 3}});
  c.require(verdict(sexticsStable).kind == VerdictKind::Stable, "{X^6,Y^6,Z^6,X^2Y^2Z^2,X^3Z^3} stable");

  const MonomialFamily quintics({{5, 0, 0}, {4, 0, 1}, {0, 5, 0}, {0, 4, 1}, {0, 0, 5}});
  const auto mQuintics = maxSlope(quintics);
  c.require(verdict(quintics).kind == VerdictKind::Unstable, "quintic family unstable");
  c.require(mQuintics.maxProperSlope && *mQuintics.maxProperSlope == Slope(-6), "quintic family max proper slope -6");
  c.require(familySlope(quintics) == Slope(-25, 4), "quintic family slope -25/4");

  const MonomialFamily sixMembers({{4, 2, 0}, {4, 0, 2}, {0, 3, 3}, {0, 5, 0}, {0, 0, 5}, {7, 0, 0}});
  const auto vSixMembers = verdict(sixMembers);
  c.require(vSixMembers.kind == VerdictKind::SemistableNotStable, "six-member family semistable, not stable");
  c.require(vSixMembers.witness && vSixMembers.witness->indices == std::vector<std::size_t>{0, 1, 2, 3, 4} &&
                vSixMembers.witness->slope == Slope(-7),
            "six-member family equality witness");
  return c;
}

// 2. Fast maximal slope equals the exhaustive oracle on random primary families.
Check oracleEquivalence() {
  Check c;
  oracle::FamilyGen gen(500);
  for (int trial = 0; trial < 500 && c.ok; ++trial) {
    const std::size_t vars = static_cast<std::size_t>(gen.uniform(3, 4));
    const std::size_t n = static_cast<std::size_t>(gen.uniform(static_cast<long>(vars), 10));
    const auto f = oracle::family(gen.family(n, vars, 6, true));
    const auto fast = maxSlope(f);
    const auto brute = maxSlopeBruteForce(f);
    const std::string tag = "family #" + std::to_string(trial);
    c.require(fast.maxSlope == brute.maxSlope, tag + ": max slope");
    c.require(fast.witness == brute.witness, tag + ": witness");
    c.require(fast.maxProperSlope == brute.maxProperSlope, tag + ": proper max slope");
    c.require(fast.properWitness == brute.properWitness, tag + ": proper witness");
  }
  return c;
}

// 3. All monomials of degree d in N+1 variables are semistable.
Check allMonomials() {
  Check c;
  for (long N = 1; N <= 3; ++N)
    for (long d = 1; d <= 5; ++d)
      c.require(checkSemistable(allMonomialsFamily(N, d)), "N=" + std::to_string(N) + " d=" + std::to_string(d));
  return c;
}

// 4. Pure-power and four-monomial criteria agree with check.
Check closedFormCriteria() {
  Check c;
  for (std::size_t vars = 2; vars <= 5; ++vars) {
    std::vector<long> degs(vars, 1);
    while (true) {
      std::vector<Integer> sorted(degs.begin(), degs.end());
      std::vector<Monomial> ms;
      for (std::size_t v = 0; v < vars; ++v) ms.push_back(Monomial::purePower(vars, v, sorted[v]));
      c.require(powersCheck(sorted) == checkSemistable(MonomialFamily(ms)), "pure powers");
      std::size_t k = vars;
      while (k > 0 && degs[k - 1] == 6) --k;
      if (k == 0) break;
      const long next = degs[k - 1] + 1;
      for (std::size_t j = k - 1; j < vars; ++j) degs[j] = next;
    }
  }
  for (long d1 = 1; d1 <= 5; ++d1)
    for (long d2 = 1; d2 <= 5; ++d2)
      for (long d3 = 1; d3 <= 5; ++d3)
        for (long a1 = 0; a1 < d1; ++a1)
          for (long a2 = 0; a2 < d2; ++a2)
            for (long a3 = 0; a3 < d3; ++a3) {
              const MonomialFamily f({{d1, 0, 0}, {0, d2, 0}, {0, 0, d3}, {a1, a2, a3}});
              c.require(fourMonomialCheck(d1, d2, d3, Monomial{a1, a2, a3}) == checkSemistable(f),
                        "four monomials " + std::to_string(d1) + std::to_string(d2) + std::to_string(d3) + " / " +
                            std::to_string(a1) + std::to_string(a2) + std::to_string(a3));
            }
  return c;
}

// 5. Section criteria and the monomial fast path.
Check sectionCriteria() {
  Check c;
  const Polynomial P = mono({9, 1, 0}) + mono({9, 0, 1}) + mono({1, 9, 0}) + mono({0, 9, 1}) + mono({1, 0, 9}) +
                       mono({0, 1, 9});
  const PolyFamily tenthPowers({mono({10, 0, 0}), mono({0, 10, 0}), mono({0, 0, 10}), P});
  c.require(syzygySectionDim(tenthPowers, 13) >= 1, "tenth powers with P: section at twist 13");
  c.require(rank3Verdict(tenthPowers[0], tenthPowers[1], tenthPowers[2], tenthPowers[3]).kind == VerdictKind::Unstable, "tenth powers with P: unstable");
  const MonomialFamily lowSection({{3, 0, 0}, {1, 2, 0}, {0, 2, 1}});
  c.require(minSectionDegreeMonomial(lowSection) == 4, "(X^3,XY^2,Y^2Z) lowest section degree 4");
  const PolyFamily lowSectionAsPolys(lowSection);
  c.require(rank2Verdict(lowSectionAsPolys[0], lowSectionAsPolys[1], lowSectionAsPolys[2]).kind == VerdictKind::Unstable, "(X^3,XY^2,Y^2Z) unstable");
  c.require(rank2Verdict(mono({2, 0, 0}), mono({0, 2, 0}), mono({0, 0, 2})).semistable(), "(X^2,Y^2,Z^2)");

  std::vector<Monomial> pool;
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= 4; ++b)
      for (long e = 0; e <= 4; ++e) pool.push_back(Monomial{a, b, e});
  for (std::size_t i = 0; i < pool.size() && c.ok; ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      for (std::size_t k = j + 1; k < pool.size(); ++k) {
        const MonomialFamily f({pool[i], pool[j], pool[k]});
        const PolyFamily pf(f);
        // A nonzero syzygy has at least two nonzero entries, so the scan
        // starts at the second smallest degree.
        auto ds = pf.degrees();
        std::sort(ds.begin(), ds.end());
        long m = ds[1];
        while (syzygySectionDim(pf, m) == 0) ++m;
        c.require(minSectionDegreeMonomial(f) == m, "fast path on " + toString(pool[i]) + "," + toString(pool[j]) +
                                                         "," + toString(pool[k]));
      }
  return c;
}

// 6. Numeric bounds.
Check bounds() {
  Check c;
  c.require(flennerK(2, 2) == 2 && flennerK(2, 3) == 4 && flennerK(2, 4) == 7, "flenner k (2,4,7)");
  c.require(bogomolovMinDegree(DegreeSequence{2, 2, 2}) == 7, "bogomolov (2,2,2) = 7");
  oracle::FamilyGen gen(600);
  for (int i = 0; i < 100; ++i) {
    const long a = gen.uniform(1, 100), b = gen.uniform(1, 100), e = gen.uniform(1, 100);
    c.require(discriminant(DegreeSequence{a, b, e}) == 2 * a * b + 2 * a * e + 2 * b * e - a * a - b * b - e * e,
              "discriminant closed form");
  }
  const std::vector<std::pair<long, Rational>> table{{3, 45}, {4, 40}, {5, makeRational(75, 2)},
                                                     {6, 36}, {7, 35}, {9, makeRational(135, 4)},
                                                     {11, 33}, {16, 32}, {31, 31}};
  for (const auto& [n, expected] : table)
    c.require(tightClosureBound(DegreeSequence(std::vector<Integer>(static_cast<std::size_t>(n), 30))) == expected,
              "table row n=" + std::to_string(n));
  return c;
}

// 7. Master inequality equivalent to all r-conditions.
Check degreeCondition() {
  Check c;
  std::function<void(std::vector<long>&, std::size_t)> walk = [&](std::vector<long>& cur, std::size_t n) {
    if (cur.size() == n) {
      const DegreeSequence d(std::vector<Integer>(cur.begin(), cur.end()));
      bool all = true;
      for (long r = 1; r <= static_cast<long>(n) - 2; ++r) all = all && necessaryConditionAt(d, r);
      c.require(necessaryCondition(d).holds == all, "degree sequence");
      return;
    }
    for (long x = cur.empty() ? 1 : cur.back(); x <= 10; ++x) {
      cur.push_back(x);
      walk(cur, n);
      cur.pop_back();
    }
  };
  for (std::size_t n = 2; n <= 7; ++n) {
    std::vector<long> cur;
    walk(cur, n);
  }
  return c;
}

// 8. Generic line certificates and determinism.
Check genericLine() {
  Check c;
  const PolyFamily cubics(MonomialFamily({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {2, 1, 0}}));
  const PolyFamily quartics(MonomialFamily({{4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {3, 1, 0}, {3, 0, 1}}));
  c.require(lineIndependenceTest(cubics).outcome == LineOutcome::CertifiedYes, "cubics with X^2Y certified");
  LineTestOptions sampled;
  sampled.trials = 64;
  c.require(lineIndependenceTest(quartics, sampled).outcome == LineOutcome::ProbablyNo, "quartics with X^3Y, X^3Z sampled");
  sampled.exhaustive = true;
  c.require(lineIndependenceTest(quartics, sampled).outcome == LineOutcome::CertifiedNo, "quartics with X^3Y, X^3Z exhaustive");
  for (const char* family : {"X^3,Y^3,Z^3,X^2*Y", "X^4,Y^4,Z^4,X^3*Y,X^3*Z"}) {
    std::vector<std::string> outputs;
    for (int run = 0; run < 3; ++run) {
      std::istringstream in;
      std::ostringstream out, err;
      cli::run({"line-test", "--json", "--seed", "12345", "--monomials", family}, in, out, err);
      outputs.push_back(out.str());
    }
    c.require(!outputs[0].empty() && outputs[0] == outputs[1] && outputs[1] == outputs[2], "identical JSON");
  }
  return c;
}

// 9. Parameter criterion against the resolution criterion.
Check resolutionCriterion() {
  Check c;
  for (long N = 2; N <= 4; ++N) {
    std::vector<long> degs(static_cast<std::size_t>(N + 1), 1);
    while (true) {
      std::vector<Integer> desc(degs.rbegin(), degs.rend());
      c.require(parameterCriterion(N, DegreeSequence(desc)) == bohnhorstSpindler({{0}, desc, N}).semistable,
                "grid N=" + std::to_string(N));
      std::size_t k = degs.size();
      while (k > 0 && degs[k - 1] == 6) --k;
      if (k == 0) break;
      const long next = degs[k - 1] + 1;
      for (std::size_t j = k - 1; j < degs.size(); ++j) degs[j] = next;
    }
    for (long d = 1; d <= 30; ++d) {
      const std::vector<Integer> constant(static_cast<std::size_t>(N + 1), d);
      c.require(parameterCriterion(N, DegreeSequence(constant)) && bohnhorstSpindler({{0}, constant, N}).semistable,
                "constant degrees");
    }
  }
  return c;
}

// 10. Search for semistable families.
Check search(double& sweepSeconds) {
  Check c;
  auto attempt = [&](long N, long d, std::size_t n) {
    SearchSpec s;
    s.N = N;
    s.d = d;
    s.n = n;
    const auto r = findSemistableFamily(s);
    const std::string tag = "(" + std::to_string(N) + "," + std::to_string(d) + "," + std::to_string(n) + ")";
    c.require(r.status == SearchStatus::Found, tag + " found");
    if (r.family) c.require(verdictBruteForce(*r.family).semistable(), tag + " re-verified");
  };
  for (long d = 1; d <= 7; ++d)
    for (std::size_t n = 2; n <= static_cast<std::size_t>(d + 1); ++n) attempt(1, d, n);
  for (long d = 1; d <= 3; ++d)
    for (std::size_t n = 2; n <= static_cast<std::size_t>((d + 2) * (d + 1) / 2); ++n) attempt(2, d, n);
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 2; n <= 15; ++n) attempt(2, 4, n);
  sweepSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(sweepSeconds <= 60.0, "(2,4,.) sweep within 60 s");
  return c;
}

}  // namespace

int main() {
  int failures = 0;
  double sweep = 0;
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"worked families: verdicts, slopes, witnesses (exact)", workedFamilies},
      {"maxSlope = brute force on 500 random primary families", oracleEquivalence},
      {"all-monomial families semistable, N<=3, d<=5 (check)", allMonomials},
      {"powersCheck / fourMonomialCheck agree with check on full grids", closedFormCriteria},
      {"section criteria; fast path on all triples with exponents <=4", sectionCriteria},
      {"flenner k, bogomolov, discriminant, tight-closure table", bounds},
      {"degree condition: master inequality iff all r (n<=7, entries<=10)", degreeCondition},
      {"generic line: certificates and deterministic JSON", genericLine},
      {"parameter criterion = resolution criterion (N<=4, degrees<=6)", resolutionCriterion},
      {"search finds semistable families; oracle re-verifies", [&] { return search(sweep); }},
  };
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu  %s  [%.2fs]%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                c.ok ? "" : "  -- ", c.detail.c_str());
    if (i + 1 == criteria.size()) std::printf("         (2,4,n) sweep: %.2fs of 60s\n", sweep);
    failures += c.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
