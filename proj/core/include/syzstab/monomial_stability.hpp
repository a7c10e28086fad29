#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "syzstab/monomial.hpp"
#include "syzstab/slope.hpp"
#include "syzstab/verdict.hpp"

namespace syzstab {

/// Maximal slope over all subfamilies |J| >= 2, plus the maximum over proper
/// subfamilies J != I. Witnesses are tie-broken by smallest |J|, then by the
/// lexicographically smallest sorted index set. A two-member family has no
/// proper subfamily, so the proper fields are empty.
struct MaxSlopeResult {
  Slope maxSlope;
  SubsetWitness witness;
  std::optional<Slope> maxProperSlope;
  std::optional<SubsetWitness> properWitness;
};

/// Brute-force subset ceiling used when none is passed explicitly.
inline constexpr std::size_t kDefaultOracleCeiling = 20;

/// Slope of Syz(f_i, i in J)(twist): (r*twist + d_J - sum d_i) / r with r = |J|-1.
Slope subsetSlope(const MonomialFamily& family, std::span<const std::size_t> indices, long twist = 0);

/// subsetSlope with J = I.
Slope familySlope(const MonomialFamily& family, long twist = 0);

/// Builds the witness record for the given (sorted, |J| >= 2) subfamily.
SubsetWitness makeWitness(const MonomialFamily& family, std::vector<std::size_t> indices);

/// Exhaustive maximum over all 2^n - n - 1 admissible subsets. Requires a
/// family that is primary up to its common factor and n <= ceiling.
MaxSlopeResult maxSlopeBruteForce(const MonomialFamily& family, std::size_t ceiling = kDefaultOracleCeiling);

/// Same contract as maxSlopeBruteForce, computed from the meet-closure of the
/// family: for each closure element g, only the k lowest-degree multiples of g
/// can maximize the slope among subsets with gcd divisible by g.
MaxSlopeResult maxSlope(const MonomialFamily& family);

/// Combinatorial (semi)stability decision. Families that are primary up to
/// their common factor get an exact verdict; others are certified Unstable
/// when a proper subfamily violates the subset slope bound, else Inconclusive.
StabilityVerdict verdict(const MonomialFamily& family);

/// verdict() recomputed with maxSlopeBruteForce; used to cross-check.
StabilityVerdict verdictBruteForce(const MonomialFamily& family, std::size_t ceiling = kDefaultOracleCeiling);

struct SameDegreeResult {
  bool holds = true;
  std::optional<Monomial> violating;
  /// Number of members divisible by `violating`.
  std::size_t multiples = 0;
};

/// Equal-degree criterion: (s_nu - 1)/(d - e) <= (n - 1)/d for every monomial
/// nu of degree e < d, where s_nu counts the members divisible by X^nu. Only
/// meets of subfamilies are enumerated.
SameDegreeResult sameDegreeCheck(const MonomialFamily& family);

/// Pure powers X_i^{d_i}: semistable iff (N-1) d_N <= d_0 + ... + d_{N-1}.
/// Expects 1 <= d_0 <= ... <= d_N.
bool powersCheck(std::span<const Integer> degrees);

/// Four monomials X^{d1}, Y^{d2}, Z^{d3}, X^{a1}Y^{a2}Z^{a3} with a_j < d_j.
bool fourMonomialCheck(const Integer& d1, const Integer& d2, const Integer& d3, const Monomial& a);

/// All C(N+d, N) monomials of degree d in N+1 variables, descending lex order.
MonomialFamily allMonomialsFamily(long N, long d);

}  // namespace syzstab
