#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "syzstab/monomial.hpp"
#include "syzstab/polynomial.hpp"

namespace syzstab::cli {

/// Input family: exactly one of monomials / polynomials is set.
struct FamilyDocument {
  std::size_t variables = 0;
  std::optional<MonomialFamily> monomials;
  std::optional<PolyFamily> polynomials;

  bool isMonomial() const noexcept { return monomials.has_value(); }
  PolyFamily asPolynomials() const;
  /// Throws ParseError when the document holds polynomials.
  const MonomialFamily& requireMonomials() const;
};

/// Parses "X^4*Y^2" style text. Names are X,Y,Z,W or X0, X1, ...; the only
/// operator is '*', exponents are positive integers, "1" is the constant.
/// With variables == 0 the count is inferred from the highest name used.
Monomial parseMonomial(std::string_view text, std::size_t variables);

/// Comma-separated monomials, all over one inferred or given variable count.
std::vector<Monomial> parseMonomialList(std::string_view text, std::optional<std::size_t> variables);

/// Accepts a FamilyDocument, or any object whose "family" member is one.
FamilyDocument parseDocument(const nlohmann::json& j);

nlohmann::json toJson(const FamilyDocument& doc);

}  // namespace syzstab::cli
