#include "syzstab/slope.hpp"

#include <ostream>

namespace syzstab {

Slope::Slope(Rational value) : value_(std::move(value)) { value_.canonicalize(); }

Slope::Slope(const Integer& num, const Integer& den) : value_(makeRational(num, den)) {}

Slope::Slope(long num, long den) : value_(makeRational(num, den)) {}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string toString(const Slope& s) { return toString(s.value()); }

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << toString(s); }

}  // namespace syzstab
