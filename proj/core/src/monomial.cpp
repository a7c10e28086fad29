#include "syzstab/monomial.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

#include "syzstab/error.hpp"

namespace syzstab {

namespace {

void requireSameLength(const Monomial& a, const Monomial& b) {
  if (a.variables() != b.variables())
    throw PreconditionError("variable-count", "monomials live in rings with different variable counts");
}

std::string variableName(std::size_t variables, std::size_t j) {
  static constexpr const char* kShort[] = {"X", "Y", "Z", "W"};
  if (variables <= 4) return kShort[j];
  return "X" + std::to_string(j);
}

}  // namespace

Monomial::Monomial(std::vector<Integer> exponents) : exponents_(std::move(exponents)) {
  for (const auto& e : exponents_) {
    if (e < 0) throw PreconditionError("nonnegative-exponent", "negative exponent in monomial");
    degree_ += e;
  }
}

Monomial::Monomial(std::initializer_list<long> exponents)
    : Monomial(std::vector<Integer>(exponents.begin(), exponents.end())) {}

Monomial Monomial::one(std::size_t variables) { return Monomial(std::vector<Integer>(variables, 0)); }

Monomial Monomial::purePower(std::size_t variables, std::size_t j, const Integer& power) {
  std::vector<Integer> e(variables, 0);
  e.at(j) = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  requireSameLength(*this, other);
  for (std::size_t j = 0; j < exponents_.size(); ++j)
    if (exponents_[j] > other.exponents_[j]) return false;
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t j = 0; j < exponents_.size(); ++j)
    if (exponents_[j] > 0) s.push_back(j);
  return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
  requireSameLength(*this, other);
  std::vector<Integer> e(exponents_.size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = exponents_[j] + other.exponents_[j];
  return Monomial(std::move(e));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.variables() != b.variables()) return a.variables() <=> b.variables();
  for (std::size_t j = 0; j < a.variables(); ++j) {
    int c = cmp(a[j], b[j]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Integer degree(const Monomial& m) { return m.degree(); }

Monomial meet(const Monomial& a, const Monomial& b) {
  requireSameLength(a, b);
  std::vector<Integer> e(a.variables());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = a[j] < b[j] ? a[j] : b[j];
  return Monomial(std::move(e));
}

Monomial join(const Monomial& a, const Monomial& b) {
  requireSameLength(a, b);
  std::vector<Integer> e(a.variables());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = a[j] < b[j] ? b[j] : a[j];
  return Monomial(std::move(e));
}

std::string toString(const Monomial& m) {
  std::string out;
  for (std::size_t j = 0; j < m.variables(); ++j) {
    if (m[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += variableName(m.variables(), j);
    if (m[j] != 1) out += "^" + m[j].get_str();
  }
  return out.empty() ? "1" : out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << toString(m); }

MonomialFamily::MonomialFamily(std::vector<Monomial> members) : members_(std::move(members)) {
  if (members_.size() < 2) throw PreconditionError("family-size", "a family needs at least two monomials");
  const std::size_t vars = members_.front().variables();
  if (vars == 0) throw PreconditionError("variable-count", "monomials need at least one variable");
  std::set<Monomial> seen;
  for (const auto& m : members_) {
    if (m.variables() != vars)
      throw PreconditionError("variable-count", "family members have different variable counts");
    if (!seen.insert(m).second)
      throw PreconditionError("distinct-members", "duplicate monomial " + toString(m) + " in family");
  }
}

std::vector<Integer> MonomialFamily::degrees() const {
  std::vector<Integer> d;
  d.reserve(members_.size());
  for (const auto& m : members_) d.push_back(m.degree());
  return d;
}

Monomial MonomialFamily::meetOf(std::span<const std::size_t> indices) const {
  if (indices.empty()) throw std::invalid_argument("meet over an empty index set");
  Monomial g = members_.at(indices.front());
  for (std::size_t i : indices.subspan(1)) g = meet(g, members_.at(i));
  return g;
}

Monomial MonomialFamily::commonFactor() const {
  Monomial g = members_.front();
  for (const auto& m : members_) g = meet(g, m);
  return g;
}

bool isPrimary(std::span<const Monomial> monomials) {
  if (monomials.empty()) return false;
  const std::size_t vars = monomials.front().variables();
  std::vector<bool> covered(vars, false);
  for (const auto& m : monomials) {
    auto s = m.support();
    if (s.size() == 1) covered[s.front()] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

bool isPrimary(const MonomialFamily& family) { return isPrimary(std::span<const Monomial>(family.members())); }

bool isPrimaryUpToCommonFactor(const MonomialFamily& family) {
  const Monomial g = family.commonFactor();
  std::vector<Monomial> reduced;
  reduced.reserve(family.size());
  for (const auto& m : family) {
    std::vector<Integer> e(m.variables());
    for (std::size_t j = 0; j < e.size(); ++j) e[j] = m[j] - g[j];
    reduced.emplace_back(std::move(e));
  }
  return isPrimary(std::span<const Monomial>(reduced));
}

std::vector<Monomial> monomialsOfDegree(std::size_t variables, long degree) {
  std::vector<Monomial> out;
  if (degree < 0 || variables == 0) return out;
  std::vector<Integer> e(variables, 0);
  // Recursive fill: first coordinate from degree down to 0.
  auto fill = [&](auto&& self, std::size_t j, long remaining) -> void {
    if (j + 1 == variables) {
      e[j] = remaining;
      out.emplace_back(e);
      return;
    }
    for (long a = remaining; a >= 0; --a) {
      e[j] = a;
      self(self, j + 1, remaining - a);
    }
  };
  fill(fill, 0, degree);
  return out;
}

}  // namespace syzstab
