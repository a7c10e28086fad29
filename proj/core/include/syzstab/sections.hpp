#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "syzstab/monomial.hpp"
#include "syzstab/polynomial.hpp"
#include "syzstab/verdict.hpp"

namespace syzstab {

/// Degree-m piece of Syz(f_1..f_n): tuples (a_i) with deg a_i = m - d_i and
/// sum a_i f_i = 0. Summands with m < d_i contribute nothing.
struct SectionQuery {
  PolyFamily family;
  long twist = 0;
};

/// Dimensions of the linear map  (+)_i R_{m-d_i} -> R_m  whose kernel is
/// the space of sections of Syz(m).
struct SectionMapDims {
  std::size_t domain = 0;
  std::size_t codomain = 0;
  std::size_t rank = 0;
  std::size_t nullity = 0;
};

/// All monomials of degree m in N+1 variables, descending lex; empty for m < 0.
std::vector<Monomial> monomialBasis(long N, long m);

/// Position of `exponents` in monomialBasis(N, sum(exponents)).
std::size_t monomialIndex(std::span<const long> exponents);

SectionMapDims sectionMap(const PolyFamily& family, long twist);

/// Exact dimension of the degree-m syzygy space (the nullity of sectionMap).
std::size_t syzygySectionDim(const PolyFamily& family, long twist);
std::size_t syzygySectionDim(const SectionQuery& query);

/// A basis of the degree-m syzygies; each entry holds one a_i per member.
std::vector<std::vector<Polynomial>> syzygySectionBasis(const PolyFamily& family, long twist);

/// Smallest m in [from, upTo] with a nonzero section, scanning upward.
std::optional<long> firstSectionDegree(const PolyFamily& family, long from, long upTo);

/// Minimum over pairs of deg lcm(f_i, f_j): the lowest degree of a nonzero
/// syzygy of a monomial family.
long minSectionDegreeMonomial(const MonomialFamily& family);

/// Greatest common divisor of the members, normalized to leading coefficient 1.
Polynomial commonFactor(const PolyFamily& family);

/// True iff the members generate an ideal primary to (X_0..X_N), i.e. they
/// have no common zero in projective space.
bool isPrimary(const PolyFamily& family);

/// Rank-two criterion for three forms: sections of Syz(m) with
/// 2m + d_I - sum d_i < 0 destabilize; without them the sheaf is semistable,
/// and stable when none exist at equality either.
StabilityVerdict rank2Verdict(const Polynomial& f1, const Polynomial& f2, const Polynomial& f3);

/// Rank-three criterion for four primary forms in three variables, ordered
/// degrees d_1 <= ... <= d_4: semistable when 2 d_4 <= d_1 + d_2 + d_3 and
/// Syz(m) has no sections for m < sum d_i / 3; unstable when such a section
/// exists; otherwise inconclusive.
StabilityVerdict rank3Verdict(const Polynomial& f1, const Polynomial& f2, const Polynomial& f3,
                              const Polynomial& f4);

}  // namespace syzstab
