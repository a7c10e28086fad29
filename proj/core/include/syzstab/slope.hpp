#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "syzstab/arith.hpp"

namespace syzstab {

/// Exact slope deg/rk of a sheaf. Always reduced with positive denominator.
class Slope {
 public:
  Slope() = default;
  explicit Slope(Rational value);
  Slope(const Integer& num, const Integer& den);
  Slope(long num, long den = 1);

  const Rational& value() const noexcept { return value_; }
  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  double approx() const { return value_.get_d(); }

  friend bool operator==(const Slope& a, const Slope& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

 private:
  Rational value_ = 0;
};

/// "-15/2" or "-7".
std::string toString(const Slope& s);
std::ostream& operator<<(std::ostream& os, const Slope& s);

}  // namespace syzstab
