#include "cli/document.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "cli/json_output.hpp"
#include "syzstab/error.hpp"

namespace syzstab::cli {

namespace {

constexpr std::string_view kLetters = "XYZW";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool allDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

enum class Naming { Unknown, Letters, Indexed };

struct Factor {
  std::size_t variable;
  Integer power;
};

struct ParsedMonomial {
  std::vector<Factor> factors;
  Naming naming = Naming::Unknown;
};

// Juxtaposed factors ("XZ^3", "X1X2") get an explicit '*' between them.
std::string splitJuxtaposed(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (kLetters.find(c) != std::string_view::npos && !out.empty() && out.back() != '*' &&
        !std::isspace(static_cast<unsigned char>(out.back())))
      out.push_back('*');
    out.push_back(c);
  }
  return out;
}

ParsedMonomial parseFactors(std::string_view raw) {
  const std::string normalized = splitJuxtaposed(trim(raw));
  std::string_view text = normalized;
  if (text.empty()) throw ParseError("empty monomial");
  ParsedMonomial out;
  if (text == "1") return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t star = text.find('*', start);
    const std::string_view factor = trim(text.substr(start, star == std::string_view::npos ? text.npos : star - start));
    if (factor.empty()) throw ParseError("empty factor in monomial '" + std::string(text) + "'");
    const std::size_t caret = factor.find('^');
    const std::string_view name = factor.substr(0, caret);
    Integer power = 1;
    if (caret != std::string_view::npos) {
      const std::string_view exponent = factor.substr(caret + 1);
      if (!allDigits(exponent)) throw ParseError("bad exponent in '" + std::string(factor) + "'");
      power = Integer(std::string(exponent));
      if (power == 0) throw ParseError("exponent must be positive in '" + std::string(factor) + "'");
    }
    Naming naming;
    std::size_t variable;
    if (name.size() == 1 && kLetters.find(name[0]) != std::string_view::npos) {
      naming = Naming::Letters;
      variable = kLetters.find(name[0]);
    } else if (name.size() >= 2 && name[0] == 'X' && allDigits(name.substr(1))) {
      naming = Naming::Indexed;
      auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), variable);
      if (ec != std::errc() || ptr != name.data() + name.size()) throw ParseError("bad variable '" + std::string(name) + "'");
    } else {
      throw ParseError("unknown variable '" + std::string(name) + "'");
    }
    if (out.naming != Naming::Unknown && out.naming != naming)
      throw ParseError("mixed variable naming in '" + std::string(text) + "'");
    out.naming = naming;
    for (const auto& f : out.factors)
      if (f.variable == variable) throw ParseError("repeated variable in '" + std::string(text) + "'");
    out.factors.push_back({variable, power});
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return out;
}

std::size_t requiredVariables(const ParsedMonomial& m) {
  std::size_t needed = 0;
  for (const auto& f : m.factors) needed = std::max(needed, f.variable + 1);
  return needed;
}

Monomial build(const ParsedMonomial& m, std::size_t variables) {
  if (requiredVariables(m) > variables) throw ParseError("monomial uses more variables than declared");
  std::vector<Integer> exps(variables, 0);
  for (const auto& f : m.factors) exps[f.variable] = f.power;
  return Monomial(std::move(exps));
}

Integer integerFrom(const nlohmann::json& j, const char* what) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::string_view body = !s.empty() && s[0] == '-' ? std::string_view(s).substr(1) : std::string_view(s);
    if (allDigits(body)) return Integer(s);
  }
  throw ParseError(std::string("expected an integer for ") + what);
}

Monomial monomialFrom(const nlohmann::json& j, std::size_t variables) {
  if (j.is_string()) return build(parseFactors(j.get<std::string>()), variables);
  if (!j.is_array()) throw ParseError("a monomial is an exponent vector or a string");
  if (j.size() != variables) throw ParseError("exponent vector length differs from 'variables'");
  std::vector<Integer> exps;
  for (const auto& e : j) {
    Integer v = integerFrom(e, "an exponent");
    if (v < 0) throw ParseError("negative exponent");
    exps.push_back(std::move(v));
  }
  return Monomial(std::move(exps));
}

Polynomial polynomialFrom(const nlohmann::json& j, std::size_t variables) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("a polynomial is an object with a 'terms' array");
  std::vector<Term> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 3) throw ParseError("a term is [numerator, denominator, exponents]");
    const Integer num = integerFrom(t[0], "a coefficient numerator");
    const Integer den = integerFrom(t[1], "a coefficient denominator");
    if (den == 0) throw ParseError("zero denominator");
    terms.push_back({makeRational(num, den), monomialFrom(t[2], variables)});
  }
  if (terms.empty()) throw ParseError("a polynomial needs at least one term");
  return Polynomial(variables, std::move(terms));
}

}  // namespace

PolyFamily FamilyDocument::asPolynomials() const { return monomials ? PolyFamily(*monomials) : *polynomials; }

const MonomialFamily& FamilyDocument::requireMonomials() const {
  if (!monomials) throw ParseError("this command needs a monomial family");
  return *monomials;
}

Monomial parseMonomial(std::string_view text, std::size_t variables) {
  const ParsedMonomial m = parseFactors(text);
  return build(m, variables == 0 ? std::max<std::size_t>(requiredVariables(m), 1) : variables);
}

std::vector<Monomial> parseMonomialList(std::string_view text, std::optional<std::size_t> variables) {
  std::vector<ParsedMonomial> parsed;
  Naming naming = Naming::Unknown;
  std::size_t needed = 1;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parsed.push_back(parseFactors(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    const Naming n = parsed.back().naming;
    if (n != Naming::Unknown) {
      if (naming != Naming::Unknown && naming != n) throw ParseError("mixed variable naming in monomial list");
      naming = n;
    }
    needed = std::max(needed, requiredVariables(parsed.back()));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  const std::size_t vars = variables.value_or(needed);
  std::vector<Monomial> out;
  for (const auto& p : parsed) out.push_back(build(p, vars));
  return out;
}

FamilyDocument parseDocument(const nlohmann::json& input) {
  const nlohmann::json& j = input.is_object() && input.contains("family") ? input["family"] : input;
  if (!j.is_object()) throw ParseError("family document must be a JSON object");
  if (!j.contains("variables") || !j["variables"].is_number_integer() || j["variables"].get<long long>() < 1)
    throw ParseError("'variables' must be a positive integer");
  FamilyDocument doc;
  doc.variables = j["variables"].get<std::size_t>();
  const bool hasMonomials = j.contains("monomials");
  const bool hasPolynomials = j.contains("polynomials");
  if (hasMonomials == hasPolynomials) throw ParseError("exactly one of 'monomials' and 'polynomials' is required");
  try {
    if (hasMonomials) {
      if (!j["monomials"].is_array()) throw ParseError("'monomials' must be an array");
      std::vector<Monomial> ms;
      for (const auto& m : j["monomials"]) ms.push_back(monomialFrom(m, doc.variables));
      doc.monomials.emplace(std::move(ms));
    } else {
      if (!j["polynomials"].is_array()) throw ParseError("'polynomials' must be an array");
      std::vector<Polynomial> ps;
      for (const auto& p : j["polynomials"]) ps.push_back(polynomialFrom(p, doc.variables));
      doc.polynomials.emplace(std::move(ps));
    }
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return doc;
}

nlohmann::json toJson(const FamilyDocument& doc) {
  nlohmann::json j;
  j["variables"] = doc.variables;
  if (doc.monomials) {
    j["monomials"] = nlohmann::json::array();
    for (const auto& m : *doc.monomials) j["monomials"].push_back(toJson(m));
  } else {
    j["polynomials"] = nlohmann::json::array();
    for (const auto& p : *doc.polynomials) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& t : p.terms())
        terms.push_back({integerJson(t.coefficient.get_num()), integerJson(t.coefficient.get_den()), toJson(t.monomial)});
      j["polynomials"].push_back({{"terms", std::move(terms)}});
    }
  }
  return j;
}

}  // namespace syzstab::cli
