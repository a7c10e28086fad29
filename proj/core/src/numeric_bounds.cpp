#include "syzstab/numeric_bounds.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "syzstab/error.hpp"

namespace syzstab {

DegreeSequence::DegreeSequence(std::vector<Integer> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.size() < 2) throw PreconditionError("degree-sequence", "need at least two degrees");
  for (const auto& d : degrees_)
    if (d < 1) throw PreconditionError("degree-sequence", "degrees must be positive");
}

DegreeSequence::DegreeSequence(std::initializer_list<long> degrees)
    : DegreeSequence(std::vector<Integer>(degrees.begin(), degrees.end())) {}

Integer DegreeSequence::sum() const { return std::accumulate(degrees_.begin(), degrees_.end(), Integer(0)); }

Integer DegreeSequence::sumOfSquares() const {
  Integer s = 0;
  for (const auto& d : degrees_) s += d * d;
  return s;
}

bool DegreeSequence::sortedAscending() const { return std::is_sorted(degrees_.begin(), degrees_.end()); }

bool DegreeSequence::sortedDescending() const {
  return std::is_sorted(degrees_.begin(), degrees_.end(), std::greater<>());
}

DegreeSequence DegreeSequence::ascending() const {
  auto v = degrees_;
  std::sort(v.begin(), v.end());
  return DegreeSequence(std::move(v));
}

DegreeSequence DegreeSequence::descending() const {
  auto v = degrees_;
  std::sort(v.begin(), v.end(), std::greater<>());
  return DegreeSequence(std::move(v));
}

bool necessaryConditionAt(const DegreeSequence& d, long r) {
  const long n = static_cast<long>(d.size());
  if (r < 1 || r > n - 2) throw PreconditionError("degree-condition-index", "need 1 <= r <= n-2");
  Integer head = 0, tail = 0;
  for (long i = 0; i < n; ++i) (i <= r ? head : tail) += d[static_cast<std::size_t>(i)];
  return Integer(n - r - 1) * head >= Integer(r) * tail;
}

NecessaryResult necessaryCondition(const DegreeSequence& d) {
  if (!d.sortedAscending()) throw PreconditionError("ascending", "degree sequence must be sorted ascending");
  const long n = static_cast<long>(d.size());
  if (n < 3) return {};
  Integer head = d.sum() - d[d.size() - 1];
  NecessaryResult result;
  result.holds = head >= Integer(n - 2) * d[d.size() - 1];
  if (!result.holds)
    for (long r = 1; r <= n - 2; ++r)
      if (!necessaryConditionAt(d, r)) {
        result.firstFailingR = r;
        break;
      }
  return result;
}

long flennerK(long N, long r) {
  if (N < 2 || r < 2) throw PreconditionError("flenner-range", "need N >= 2 and r >= 2");
  Rational rhs = makeRational(r * r - 1, 4);
  if (rhs < 1) rhs = 1;
  for (long k = 1;; ++k) {
    const Rational lhs = makeRational(binomial(k + N, N) - Integer(N - 1) * k - 1, Integer(k));
    if (lhs > rhs) return k;
  }
}

Integer discriminant(const DegreeSequence& d) {
  const Integer s = d.sum();
  return s * s - Integer(static_cast<long>(d.size()) - 1) * d.sumOfSquares();
}

Integer bogomolovR(long r) {
  if (r < 2) throw PreconditionError("bogomolov-range", "rank must be at least 2");
  return binomial(r, r / 2) * binomial(r - 2, r / 2 - 1);
}

Integer bogomolovMinDegree(const DegreeSequence& d) {
  if (d.size() < 3) throw PreconditionError("bogomolov-range", "need at least three forms");
  const long r = static_cast<long>(d.size()) - 1;
  const Rational bound = makeRational(bogomolovR(r), Integer(r)) * Rational(discriminant(d)) + 1;
  // 2k > bound  <=>  k > bound / 2
  Integer k = floorPlusOne(bound / 2);
  return k < 1 ? Integer(1) : k;
}

Rational tightClosureBound(const DegreeSequence& d) {
  return makeRational(d.sum(), Integer(static_cast<long>(d.size()) - 1));
}

std::string toString(HeinConclusion c) {
  switch (c) {
    case HeinConclusion::None: return "none";
    case HeinConclusion::SemistableGeneric: return "semistableGeneric";
    case HeinConclusion::StableGenericA2: return "stableGenericA2";
    case HeinConclusion::StableGenericA3: return "stableGenericA3";
  }
  return "none";
}

std::string toString(AppendixStable a) {
  switch (a) {
    case AppendixStable::None: return "none";
    case AppendixStable::A2: return "A2";
    case AppendixStable::A3: return "A3";
  }
  return "none";
}

HeinConclusion heinPredicate(long N, long d, long n) {
  if (N < 2 || d < 1 || n < 2) throw PreconditionError("hein-range", "need N >= 2, d >= 1, n >= 2");
  // Stable on a smooth plane quartic: n <= 4d/5 + 1.
  if (N == 2 && Rational(n) <= makeRational(4 * d, 5) + 1) return HeinConclusion::StableGenericA2;
  // Stable on a genus-two curve of degree N+2: n <= (N+2)d/3 + 1.
  if (N >= 3 && Rational(n) <= makeRational((N + 2) * d, 3) + 1) return HeinConclusion::StableGenericA3;
  if (n <= d * (N + 1)) return HeinConclusion::SemistableGeneric;
  return HeinConclusion::None;
}

BohnhorstSpindlerResult bohnhorstSpindler(const ResolutionPair& p) {
  const std::size_t k = p.a.size();
  if (p.N < 1 || p.b.size() != static_cast<std::size_t>(p.N) + k)
    throw PreconditionError("resolution-shape", "need |b| = N + |a|");
  if (!std::is_sorted(p.a.begin(), p.a.end(), std::greater<>()) ||
      !std::is_sorted(p.b.begin(), p.b.end(), std::greater<>()))
    throw PreconditionError("descending", "resolution degrees must be sorted descending");
  BohnhorstSpindlerResult r;
  r.admissible = true;
  for (std::size_t i = 0; i < k; ++i)
    if (!(p.a[i] < p.b[static_cast<std::size_t>(p.N) + i])) r.admissible = false;
  const Integer sb = std::accumulate(p.b.begin(), p.b.end(), Integer(0));
  const Integer sa = std::accumulate(p.a.begin(), p.a.end(), Integer(0));
  r.mu = makeRational(sb - sa, Integer(p.N));
  r.semistable = r.admissible && (p.b.empty() || Rational(p.b.front()) <= r.mu);
  return r;
}

bool parameterCriterion(long N, const DegreeSequence& d) {
  if (N < 2) throw PreconditionError("parameter-range", "need N >= 2");
  if (d.size() != static_cast<std::size_t>(N) + 1) throw PreconditionError("parameter-length", "need N+1 degrees");
  if (!d.sortedDescending()) throw PreconditionError("descending", "degree sequence must be sorted descending");
  const Integer rest = d.sum() - d[0];
  return Integer(N - 1) * d[0] <= rest;
}

BoundsReport report(const DegreeSequence& d, long N) {
  if (N < 1) throw PreconditionError("dimension", "need N >= 1");
  const long n = static_cast<long>(d.size());
  BoundsReport r;
  r.N = N;
  r.rank = n - 1;
  r.discriminant = discriminant(d);
  r.tightClosureBound = tightClosureBound(d);
  if (N >= 2 && r.rank >= 2) r.flennerK = flennerK(N, r.rank);
  if (N == 2 && n >= 3) r.bogomolovMinDegree = bogomolovMinDegree(d);

  const bool constant = std::all_of(d.values().begin(), d.values().end(), [&](const Integer& x) { return x == d[0]; });
  if (constant && N >= 2) {
    const auto deg = toLong(d[0]);
    if (deg) {
      const HeinConclusion h = heinPredicate(N, *deg, n);
      r.heinApplicable = h != HeinConclusion::None;
      if (h == HeinConclusion::StableGenericA2) r.appendixStable = AppendixStable::A2;
      if (h == HeinConclusion::StableGenericA3) r.appendixStable = AppendixStable::A3;
    }
    if (N == 2 && n == 5)
      r.notes.emplace_back(
          "rank 4 on the plane: R = 12 and R/r = 3, so the smooth-curve condition reads 2k > 15 d^2 + 1 "
          "(a value of 60 d^2 + 1 is sometimes quoted for this case)");
  }
  r.notes.emplace_back("characteristic p >> 0: the inclusion is only guaranteed in degrees > " +
                       toString(r.tightClosureBound) + " (strict)");

  std::ostringstream s;
  s << "(f_1..f_" << n << ")* = (f_1..f_" << n << ") + R_{>= " << toString(r.tightClosureBound) << "}";
  if (r.flennerK > 0) s << " on generic complete-intersection curves of degree >= " << r.flennerK;
  if (r.bogomolovMinDegree) s << ", and on every smooth plane curve of degree >= " << *r.bogomolovMinDegree
                              << " when the syzygy bundle is stable";
  s << ", provided the syzygy bundle is semistable";
  r.statement = s.str();
  return r;
}

}  // namespace syzstab
