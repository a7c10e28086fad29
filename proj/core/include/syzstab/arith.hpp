#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace syzstab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// Reduced rational num/den. Throws std::domain_error on den == 0.
Rational makeRational(const Integer& num, const Integer& den);

/// Smallest integer strictly greater than q.
Integer floorPlusOne(const Rational& q);

/// Value as long when it fits.
std::optional<long> toLong(const Integer& v);

inline std::string toString(const Integer& v) { return v.get_str(); }
std::string toString(const Rational& q);

}  // namespace syzstab
