#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "syzstab/arith.hpp"
#include "syzstab/monomial.hpp"

namespace syzstab {

struct Term {
  Rational coefficient;
  Monomial monomial;
};

/// Sparse homogeneous polynomial with rational coefficients. Terms are kept
/// sorted by monomial (descending lex), without duplicates or zero
/// coefficients. The zero polynomial has no terms but still carries a degree.
class Polynomial {
 public:
  Polynomial(std::size_t variables, long degree);
  /// Builds from terms; merges nothing: duplicate monomials, zero
  /// coefficients and mixed degrees are rejected.
  Polynomial(std::size_t variables, std::vector<Term> terms);
  static Polynomial fromMonomial(const Monomial& m, Rational c = 1);

  std::size_t variables() const noexcept { return variables_; }
  long degree() const noexcept { return degree_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool isZero() const noexcept { return terms_.empty(); }
  bool isMonomial() const noexcept { return terms_.size() == 1; }
  const Term& leading() const { return terms_.front(); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial operator*(const Monomial& m) const;

  /// Scales so the leading coefficient is 1.
  Polynomial monic() const;

  /// Least common multiple of the coefficient denominators.
  Integer denominatorLcm() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(std::size_t variables, long degree, std::vector<Term> sortedTerms);

  std::size_t variables_;
  long degree_;
  std::vector<Term> terms_;
};

/// Exact quotient num / den. Throws std::domain_error when den does not divide num.
Polynomial divideExact(const Polynomial& num, const Polynomial& den);

std::string toString(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Ordered family of nonzero homogeneous polynomials over one ring.
class PolyFamily {
 public:
  explicit PolyFamily(std::vector<Polynomial> members);
  explicit PolyFamily(const MonomialFamily& family);

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t variables() const noexcept { return members_.front().variables(); }
  const Polynomial& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Polynomial>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  std::vector<long> degrees() const;
  /// True when every member is a single term.
  bool isMonomial() const;

 private:
  std::vector<Polynomial> members_;
};

}  // namespace syzstab
