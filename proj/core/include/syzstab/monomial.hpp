#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "syzstab/arith.hpp"

namespace syzstab {

/// A monomial X^nu as its exponent vector over the variables X_0..X_N.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Integer> exponents);
  Monomial(std::initializer_list<long> exponents);

  /// The constant monomial 1 in `variables` variables.
  static Monomial one(std::size_t variables);
  /// X_j^power in `variables` variables.
  static Monomial purePower(std::size_t variables, std::size_t j, const Integer& power);

  std::size_t variables() const noexcept { return exponents_.size(); }
  std::span<const Integer> exponents() const noexcept { return exponents_; }
  const Integer& operator[](std::size_t j) const { return exponents_[j]; }

  const Integer& degree() const noexcept { return degree_; }

  /// True if this monomial divides `other`.
  bool divides(const Monomial& other) const;

  /// Indices of the variables with a positive exponent.
  std::vector<std::size_t> support() const;

  /// Product (exponent sum).
  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents_ == b.exponents_; }
  /// Lexicographic on exponent vectors, shorter vectors first.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Integer> exponents_;
  Integer degree_ = 0;
};

/// Sum of exponents.
Integer degree(const Monomial& m);

/// Componentwise minimum: the monomial gcd.
Monomial meet(const Monomial& a, const Monomial& b);

/// Componentwise maximum: the monomial lcm.
Monomial join(const Monomial& a, const Monomial& b);

/// Renders as "X^4*Y*Z^2" (X,Y,Z,W for up to four variables, X0..XN beyond).
std::string toString(const Monomial& m);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

/// Ordered family of pairwise distinct monomials, at least two members.
class MonomialFamily {
 public:
  explicit MonomialFamily(std::vector<Monomial> members);

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t variables() const noexcept { return members_.front().variables(); }
  const Monomial& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Monomial>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// Member degrees d_i in family order.
  std::vector<Integer> degrees() const;

  /// Meet over the indexed members (indices must be nonempty).
  Monomial meetOf(std::span<const std::size_t> indices) const;
  /// Meet over the whole family.
  Monomial commonFactor() const;

 private:
  std::vector<Monomial> members_;
};

/// True iff every variable occurs as a pure power X_j^a (a >= 1) among the
/// monomials, i.e. they generate an ideal primary to the irrelevant ideal.
bool isPrimary(std::span<const Monomial> monomials);
bool isPrimary(const MonomialFamily& family);

/// True iff the family becomes primary after dividing out its common factor.
bool isPrimaryUpToCommonFactor(const MonomialFamily& family);

/// All monomials of the given degree in `variables` variables, lexicographically
/// descending (X_0^degree first). Empty for degree < 0.
std::vector<Monomial> monomialsOfDegree(std::size_t variables, long degree);

}  // namespace syzstab
