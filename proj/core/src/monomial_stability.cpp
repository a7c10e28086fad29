#include "syzstab/monomial_stability.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "syzstab/error.hpp"

namespace syzstab {

namespace {

// Slope candidate kept as an unreduced fraction num/den with den > 0.
struct Candidate {
  Integer num;
  long den = 1;
  std::vector<std::size_t> indices;  // sorted
  bool valid = false;
};

// Sign of a/b - c/d for positive b, d.
int compareFractions(const Integer& a, long b, const Integer& c, long d) {
  Integer lhs, rhs;
  mpz_mul_si(lhs.get_mpz_t(), a.get_mpz_t(), d);
  mpz_mul_si(rhs.get_mpz_t(), c.get_mpz_t(), b);
  return cmp(lhs, rhs);
}

// Is (num/den, indices) preferred over `best` under the witness order:
// larger slope, then smaller |J|, then lexicographically smaller J.
bool preferred(const Integer& num, long den, const std::vector<std::size_t>& indices, const Candidate& best) {
  if (!best.valid) return true;
  const int c = compareFractions(num, den, best.num, best.den);
  if (c != 0) return c > 0;
  if (indices.size() != best.indices.size()) return indices.size() < best.indices.size();
  return indices < best.indices;
}

void requireDecidable(const MonomialFamily& family) {
  if (!isPrimaryUpToCommonFactor(family))
    throw PreconditionError("primary", "the maximal-slope formula needs a primary monomial family");
}

std::set<Monomial> meetClosure(const MonomialFamily& family) {
  std::set<Monomial> closure(family.begin(), family.end());
  std::vector<Monomial> frontier(family.begin(), family.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& g : frontier)
      for (const auto& f : family) {
        Monomial h = meet(g, f);
        if (closure.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return closure;
}

MaxSlopeResult toResult(const MonomialFamily& family, const Candidate& best, const Candidate& proper) {
  MaxSlopeResult r;
  r.witness = makeWitness(family, best.indices);
  r.maxSlope = Slope(best.num, Integer(best.den));
  if (proper.valid) {
    r.properWitness = makeWitness(family, proper.indices);
    r.maxProperSlope = Slope(proper.num, Integer(proper.den));
  }
  return r;
}

MaxSlopeResult bruteForceUnchecked(const MonomialFamily& family) {
  const std::size_t n = family.size();
  const std::size_t vars = family.variables();
  const auto degrees = family.degrees();

  // Per-depth running meet, its degree and the degree sum of the chosen members.
  std::vector<std::vector<Integer>> meets(n + 1, std::vector<Integer>(vars));
  std::vector<Integer> meetDegree(n + 1), degreeSum(n + 1);
  std::vector<std::size_t> chosen;
  chosen.reserve(n);
  Candidate best, proper;
  Integer num;

  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t start, std::size_t depth) {
    for (std::size_t i = start; i < n; ++i) {
      const Monomial& f = family[i];
      auto& cur = meets[depth + 1];
      meetDegree[depth + 1] = 0;
      for (std::size_t v = 0; v < vars; ++v) {
        cur[v] = depth == 0 || f[v] < meets[depth][v] ? f[v] : meets[depth][v];
        meetDegree[depth + 1] += cur[v];
      }
      degreeSum[depth + 1] = (depth == 0 ? Integer(0) : degreeSum[depth]) + degrees[i];
      chosen.push_back(i);
      const std::size_t k = depth + 1;
      if (k >= 2) {
        num = meetDegree[k] - degreeSum[k];
        const long den = static_cast<long>(k - 1);
        if (preferred(num, den, chosen, best)) best = Candidate{num, den, chosen, true};
        if (k < n && preferred(num, den, chosen, proper)) proper = Candidate{num, den, chosen, true};
      }
      visit(i + 1, depth + 1);
      chosen.pop_back();
    }
  };
  visit(0, 0);
  return toResult(family, best, proper);
}

MaxSlopeResult prunedUnchecked(const MonomialFamily& family) {
  const std::size_t n = family.size();
  const auto degrees = family.degrees();
  Candidate best, proper;
  std::vector<std::size_t> multiples;
  Integer num;

  for (const Monomial& g : meetClosure(family)) {
    multiples.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (g.divides(family[i])) multiples.push_back(i);
    if (multiples.size() < 2) continue;
    std::stable_sort(multiples.begin(), multiples.end(),
                     [&](std::size_t a, std::size_t b) { return degrees[a] < degrees[b]; });
    Integer prefix = degrees[multiples[0]];
    for (std::size_t k = 2; k <= multiples.size(); ++k) {
      prefix += degrees[multiples[k - 1]];
      num = g.degree() - prefix;
      const long den = static_cast<long>(k - 1);
      const bool whole = k == n;
      // Cheap slope-only rejection before materializing the index set.
      const bool maybeBest = !best.valid || compareFractions(num, den, best.num, best.den) >= 0;
      const bool maybeProper = !whole && (!proper.valid || compareFractions(num, den, proper.num, proper.den) >= 0);
      if (!maybeBest && !maybeProper) continue;
      std::vector<std::size_t> subset(multiples.begin(), multiples.begin() + static_cast<std::ptrdiff_t>(k));
      std::sort(subset.begin(), subset.end());
      if (maybeBest && preferred(num, den, subset, best)) best = Candidate{num, den, subset, true};
      if (maybeProper && preferred(num, den, subset, proper)) proper = Candidate{num, den, std::move(subset), true};
    }
  }
  return toResult(family, best, proper);
}

StabilityVerdict decide(const MonomialFamily& family, const MaxSlopeResult& r) {
  StabilityVerdict v;
  const Slope fam = familySlope(family);
  const bool decidable = isPrimaryUpToCommonFactor(family);
  if (family.size() == 2) {
    // Rank one: torsion-free of rank one is always stable.
    v.kind = VerdictKind::Stable;
    v.notes.emplace_back("rank-one");
    return v;
  }
  if (!family.commonFactor().support().empty()) v.notes.emplace_back("common-factor-reduction");
  if (*r.maxProperSlope > fam) {
    v.kind = VerdictKind::Unstable;
    v.witness = r.properWitness;
    v.notes.emplace_back("subset-slope-bound");
    return v;
  }
  if (!decidable) {
    v.kind = VerdictKind::Inconclusive;
    v.notes.emplace_back("not-primary");
    return v;
  }
  v.notes.emplace_back("maximal-slope-criterion");
  if (*r.maxProperSlope == fam) {
    v.kind = VerdictKind::SemistableNotStable;
    v.witness = r.properWitness;
  } else {
    v.kind = VerdictKind::Stable;
  }
  return v;
}

}  // namespace

SubsetWitness makeWitness(const MonomialFamily& family, std::vector<std::size_t> indices) {
  if (indices.size() < 2) throw PreconditionError("subset-size", "a subfamily needs at least two members");
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw PreconditionError("subset-size", "repeated index in subfamily");
  if (indices.back() >= family.size()) throw PreconditionError("subset-index", "subfamily index out of range");
  SubsetWitness w;
  w.gcdMonomial = family.meetOf(indices);
  w.gcdDegree = w.gcdMonomial.degree();
  Integer sum = 0;
  for (auto i : indices) sum += family[i].degree();
  w.slope = Slope(w.gcdDegree - sum, Integer(static_cast<long>(indices.size() - 1)));
  w.indices = std::move(indices);
  return w;
}

Slope subsetSlope(const MonomialFamily& family, std::span<const std::size_t> indices, long twist) {
  // (r*m + d_J - sum d_i) / r = slope(J) + m
  const SubsetWitness w = makeWitness(family, {indices.begin(), indices.end()});
  return Slope(w.slope.value() + Rational(twist));
}

Slope familySlope(const MonomialFamily& family, long twist) {
  std::vector<std::size_t> all(family.size());
  std::iota(all.begin(), all.end(), 0);
  return subsetSlope(family, all, twist);
}

MaxSlopeResult maxSlopeBruteForce(const MonomialFamily& family, std::size_t ceiling) {
  if (family.size() > ceiling)
    throw PreconditionError("oracle-ceiling", "family has " + std::to_string(family.size()) +
                                                  " members; brute force is limited to " + std::to_string(ceiling));
  requireDecidable(family);
  return bruteForceUnchecked(family);
}

MaxSlopeResult maxSlope(const MonomialFamily& family) {
  requireDecidable(family);
  return prunedUnchecked(family);
}

StabilityVerdict verdict(const MonomialFamily& family) { return decide(family, prunedUnchecked(family)); }

StabilityVerdict verdictBruteForce(const MonomialFamily& family, std::size_t ceiling) {
  if (family.size() > ceiling)
    throw PreconditionError("oracle-ceiling", "family too large for the brute-force oracle");
  return decide(family, bruteForceUnchecked(family));
}

SameDegreeResult sameDegreeCheck(const MonomialFamily& family) {
  const Integer d = family[0].degree();
  for (const auto& m : family)
    if (m.degree() != d) throw PreconditionError("equal-degree", "family members have different degrees");
  const Integer n = static_cast<unsigned long>(family.size());

  std::vector<Monomial> candidates;
  for (const Monomial& g : meetClosure(family))
    if (g.degree() < d) candidates.push_back(g);
  std::stable_sort(candidates.begin(), candidates.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a > b;
  });

  for (const Monomial& nu : candidates) {
    std::size_t s = 0;
    for (const auto& f : family)
      if (nu.divides(f)) ++s;
    // (s - 1) / (d - e) <= (n - 1) / d  <=>  (s - 1) d <= (n - 1)(d - e)
    const Integer lhs = Integer(static_cast<unsigned long>(s - 1)) * d;
    const Integer rhs = (n - 1) * (d - nu.degree());
    if (lhs > rhs) return SameDegreeResult{false, nu, s};
  }
  return SameDegreeResult{};
}

bool powersCheck(std::span<const Integer> degrees) {
  if (degrees.size() < 2) throw PreconditionError("degree-sequence", "need at least two pure powers");
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 1) throw PreconditionError("degree-sequence", "pure-power degrees must be positive");
    if (i > 0 && degrees[i] < degrees[i - 1])
      throw PreconditionError("degree-sequence", "pure-power degrees must be sorted ascending");
  }
  const long N = static_cast<long>(degrees.size()) - 1;
  Integer head = 0;
  for (long j = 0; j < N; ++j) head += degrees[static_cast<std::size_t>(j)];
  return Integer(N - 1) * degrees.back() <= head;
}

bool fourMonomialCheck(const Integer& d1, const Integer& d2, const Integer& d3, const Monomial& a) {
  if (a.variables() != 3) throw PreconditionError("four-monomial-shape", "fourth monomial must be in three variables");
  const Integer* d[3] = {&d1, &d2, &d3};
  for (std::size_t j = 0; j < 3; ++j)
    if (!(a[j] < *d[j])) throw PreconditionError("four-monomial-shape", "need a_j < d_j for every variable");
  const Integer d4 = a.degree();
  const Integer total = d1 + d2 + d3 + d4;
  Integer mx = d1;
  for (const Integer* x : {&d2, &d3, &d4})
    if (*x > mx) mx = *x;
  const bool first = 3 * mx <= total;
  const Integer options[] = {a[0] + a[1] + d3, a[0] + d2 + a[2], d1 + a[1] + a[2], d1 + d2, d1 + d3, d2 + d3};
  const Integer mn = *std::min_element(std::begin(options), std::end(options));
  const bool second = 3 * mn >= total;
  return first && second;
}

MonomialFamily allMonomialsFamily(long N, long d) {
  if (N < 1 || d < 1) throw PreconditionError("all-monomials", "need N >= 1 and d >= 1");
  return MonomialFamily(monomialsOfDegree(static_cast<std::size_t>(N + 1), d));
}

}  // namespace syzstab
