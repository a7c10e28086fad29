#include "syzstab/polynomial.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

#include "syzstab/error.hpp"

namespace syzstab {

namespace {

using TermMap = std::map<Monomial, Rational, std::greater<>>;

std::vector<Term> toTerms(TermMap&& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back(Term{std::move(c), m});
  return out;
}

void requireSameRing(const Polynomial& a, const Polynomial& b) {
  if (a.variables() != b.variables())
    throw PreconditionError("variable-count", "polynomials live in rings with different variable counts");
}

long checkedDegree(const Monomial& m) {
  auto d = toLong(m.degree());
  if (!d) throw PreconditionError("degree-range", "polynomial degree exceeds the machine range");
  return *d;
}

}  // namespace

Polynomial::Polynomial(std::size_t variables, long degree) : variables_(variables), degree_(degree) {}

Polynomial::Polynomial(std::size_t variables, long degree, std::vector<Term> sortedTerms)
    : variables_(variables), degree_(degree), terms_(std::move(sortedTerms)) {}

Polynomial::Polynomial(std::size_t variables, std::vector<Term> terms) : variables_(variables), degree_(0) {
  if (terms.empty()) throw PreconditionError("nonzero", "use Polynomial(variables, degree) for zero");
  degree_ = checkedDegree(terms.front().monomial);
  for (const auto& t : terms) {
    if (t.monomial.variables() != variables)
      throw PreconditionError("variable-count", "term has the wrong number of variables");
    if (t.coefficient == 0) throw PreconditionError("nonzero-coefficient", "zero coefficient in polynomial");
    if (t.monomial.degree() != degree_)
      throw PreconditionError("homogeneous", "polynomial is not homogeneous");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (terms[i].monomial == terms[i - 1].monomial)
      throw PreconditionError("distinct-terms", "duplicate monomial " + toString(terms[i].monomial));
  terms_ = std::move(terms);
}

Polynomial Polynomial::fromMonomial(const Monomial& m, Rational c) {
  return Polynomial(m.variables(), std::vector<Term>{Term{std::move(c), m}});
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  requireSameRing(*this, o);
  if (isZero()) return o;
  if (o.isZero()) return *this;
  if (degree_ != o.degree_) throw PreconditionError("homogeneous", "sum of forms of different degrees");
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->monomial > j->monomial)) {
      out.push_back(*i++);
    } else if (i == terms_.end() || j->monomial > i->monomial) {
      out.push_back(*j++);
    } else {
      Rational c = i->coefficient + j->coefficient;
      if (c != 0) out.push_back(Term{std::move(c), i->monomial});
      ++i;
      ++j;
    }
  }
  return Polynomial(variables_, degree_, std::move(out));
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(variables_, degree_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coefficient *= c;
  return Polynomial(variables_, degree_, std::move(out));
}

Polynomial Polynomial::operator*(const Monomial& m) const {
  if (m.variables() != variables_)
    throw PreconditionError("variable-count", "monomial has the wrong number of variables");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.coefficient, t.monomial * m});
  return Polynomial(variables_, degree_ + checkedDegree(m), std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  requireSameRing(*this, o);
  TermMap acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc[a.monomial * b.monomial] += a.coefficient * b.coefficient;
  return Polynomial(variables_, degree_ + o.degree_, toTerms(std::move(acc)));
}

Polynomial Polynomial::monic() const {
  if (isZero()) return *this;
  return *this * Rational(1 / leading().coefficient);
}

Integer Polynomial::denominatorLcm() const {
  Integer l = 1;
  for (const auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coefficient.get_den_mpz_t());
  return l;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.variables_ != b.variables_ || a.terms_.size() != b.terms_.size()) return false;
  if (a.isZero()) return true;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

Polynomial divideExact(const Polynomial& num, const Polynomial& den) {
  if (den.isZero()) throw std::domain_error("division by the zero polynomial");
  if (num.variables() != den.variables()) throw std::domain_error("division across rings");
  const long qdeg = num.degree() - den.degree();
  Polynomial quotient(num.variables(), qdeg);
  if (num.isZero()) return quotient;
  if (qdeg < 0) throw std::domain_error("divisor has larger degree");
  Polynomial rest = num;
  const Term& lead = den.leading();
  while (!rest.isZero()) {
    const Term& top = rest.leading();
    if (!lead.monomial.divides(top.monomial)) throw std::domain_error("polynomial division is not exact");
    std::vector<Integer> e(top.monomial.variables());
    for (std::size_t j = 0; j < e.size(); ++j) e[j] = top.monomial[j] - lead.monomial[j];
    Polynomial step = Polynomial::fromMonomial(Monomial(std::move(e)), top.coefficient / lead.coefficient);
    quotient = quotient + step;
    rest = rest - step * den;
  }
  return quotient;
}

std::string toString(const Polynomial& p) {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coefficient;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool isOne = t.monomial.degree() == 0;
    if (c != 1 || isOne) {
      out += toString(c);
      if (!isOne) out += "*";
    }
    if (!isOne) out += toString(t.monomial);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << toString(p); }

PolyFamily::PolyFamily(std::vector<Polynomial> members) : members_(std::move(members)) {
  if (members_.empty()) throw PreconditionError("family-size", "empty polynomial family");
  for (const auto& p : members_) {
    if (p.variables() != members_.front().variables())
      throw PreconditionError("variable-count", "family members have different variable counts");
    if (p.isZero()) throw PreconditionError("nonzero", "zero polynomial in family");
  }
}

PolyFamily::PolyFamily(const MonomialFamily& family) : PolyFamily([&] {
    std::vector<Polynomial> out;
    out.reserve(family.size());
    for (const auto& m : family) out.push_back(Polynomial::fromMonomial(m));
    return out;
  }()) {}

std::vector<long> PolyFamily::degrees() const {
  std::vector<long> d;
  d.reserve(members_.size());
  for (const auto& p : members_) d.push_back(p.degree());
  return d;
}

bool PolyFamily::isMonomial() const {
  return std::all_of(members_.begin(), members_.end(), [](const Polynomial& p) { return p.isMonomial(); });
}

}  // namespace syzstab
