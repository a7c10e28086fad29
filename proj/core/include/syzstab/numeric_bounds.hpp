#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "syzstab/arith.hpp"

namespace syzstab {

/// Degree sequence d_1..d_n of a family, n >= 2, entries >= 1. Sorting is
/// left to each operation.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<Integer> degrees);
  DegreeSequence(std::initializer_list<long> degrees);

  std::size_t size() const noexcept { return degrees_.size(); }
  const Integer& operator[](std::size_t i) const { return degrees_[i]; }
  std::span<const Integer> values() const noexcept { return degrees_; }
  Integer sum() const;
  Integer sumOfSquares() const;
  bool sortedAscending() const;
  bool sortedDescending() const;
  DegreeSequence ascending() const;
  DegreeSequence descending() const;

 private:
  std::vector<Integer> degrees_;
};

struct NecessaryResult {
  bool holds = true;
  /// Smallest r in 1..n-2 with (n-r-1)(d_1+..+d_{r+1}) < r(d_{r+2}+..+d_n).
  std::optional<long> firstFailingR;
};

/// Degree condition for semistability: d_1 + ... + d_{n-1} >= (n-2) d_n on an
/// ascending sequence. Vacuously true for n < 3.
NecessaryResult necessaryCondition(const DegreeSequence& d);

/// The r-th degree condition checked directly (1 <= r <= n-2).
bool necessaryConditionAt(const DegreeSequence& d, long r);

/// Smallest k with (C(k+N,N) - (N-1)k - 1)/k > max{(r^2-1)/4, 1}.
long flennerK(long N, long r);

/// (sum d_i)^2 - (n-1) sum d_i^2.
Integer discriminant(const DegreeSequence& d);

/// C(r, floor(r/2)) * C(r-2, floor(r/2)-1) for rank r >= 2.
Integer bogomolovR(long r);

/// Smallest k >= 1 with 2k > (R/r) * discriminant + 1, r = n - 1. Needs n >= 3.
Integer bogomolovMinDegree(const DegreeSequence& d);

/// sum d_i / (n - 1).
Rational tightClosureBound(const DegreeSequence& d);

enum class HeinConclusion { None, SemistableGeneric, StableGenericA2, StableGenericA3 };
std::string toString(HeinConclusion c);

/// Strongest statement about n generic forms of degree d on P^N.
HeinConclusion heinPredicate(long N, long d, long n);

/// Degree data of a resolution 0 -> (+)O(a_i) -> (+)O(b_j) -> E -> 0 of a
/// rank-N bundle; a has length k, b has length N + k, both descending.
struct ResolutionPair {
  std::vector<Integer> a;
  std::vector<Integer> b;
  long N = 0;
};

struct BohnhorstSpindlerResult {
  bool admissible = false;
  bool semistable = false;
  Rational mu;
};

BohnhorstSpindlerResult bohnhorstSpindler(const ResolutionPair& p);

/// d_1 <= (d_2 + ... + d_{N+1}) / (N - 1) for a descending sequence of N+1 degrees.
bool parameterCriterion(long N, const DegreeSequence& d);

enum class AppendixStable { None, A2, A3 };
std::string toString(AppendixStable a);

struct BoundsReport {
  long N = 0;
  long rank = 0;  // n - 1
  long flennerK = 0;
  Integer discriminant;
  /// Only on the projective plane with n >= 3.
  std::optional<Integer> bogomolovMinDegree;
  Rational tightClosureBound;
  /// Constant degrees and n <= d(N+1).
  bool heinApplicable = false;
  AppendixStable appendixStable = AppendixStable::None;
  std::vector<std::string> notes;
  std::string statement;
};

/// Aggregate of the bounds above for a family with the given degrees on P^N.
BoundsReport report(const DegreeSequence& d, long N);

}  // namespace syzstab
