#include "cli/json_output.hpp"

#include <limits>

namespace syzstab::cli {

nlohmann::json integerJson(const Integer& v) {
  static const Integer lo(std::to_string(std::numeric_limits<long long>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<long long>::max()));
  if (v >= lo && v <= hi) return std::stoll(v.get_str());
  return v.get_str();
}

nlohmann::json rationalJson(const Rational& q) {
  return {{"num", integerJson(q.get_num())}, {"den", integerJson(q.get_den())}};
}

nlohmann::json toJson(const Monomial& m) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : m.exponents()) j.push_back(integerJson(e));
  return j;
}

nlohmann::json toJson(const Slope& s) { return rationalJson(s.value()); }

nlohmann::json toJson(const SubsetWitness& w) {
  // Members are numbered from 1 in all CLI output.
  std::vector<std::size_t> oneBased;
  for (auto i : w.indices) oneBased.push_back(i + 1);
  return {{"indices", oneBased},
          {"gcd", toJson(w.gcdMonomial)},
          {"gcdDegree", integerJson(w.gcdDegree)},
          {"slope", toJson(w.slope)}};
}

nlohmann::json toJson(const SectionWitness& w) {
  return {{"twist", w.twist}, {"dimension", integerJson(w.dimension)}, {"subsheafSlope", toJson(w.subsheafSlope)}};
}

nlohmann::json toJson(const StabilityVerdict& v) {
  nlohmann::json j{{"kind", toString(v.kind)}, {"semistable", v.semistable()}, {"notes", v.notes}};
  j["witness"] = v.witness ? toJson(*v.witness) : nlohmann::json(nullptr);
  j["section"] = v.section ? toJson(*v.section) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json toJson(const MaxSlopeResult& r) {
  nlohmann::json j{{"maxSlope", toJson(r.maxSlope)}, {"witness", toJson(r.witness)}};
  j["maxProperSlope"] = r.maxProperSlope ? toJson(*r.maxProperSlope) : nlohmann::json(nullptr);
  j["properWitness"] = r.properWitness ? toJson(*r.properWitness) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json toJson(const SameDegreeResult& r) {
  nlohmann::json j{{"holds", r.holds}, {"multiples", r.multiples}};
  j["violating"] = r.violating ? toJson(*r.violating) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json toJson(const SectionMapDims& d) {
  return {{"domain", d.domain}, {"codomain", d.codomain}, {"rank", d.rank}, {"nullity", d.nullity}};
}

nlohmann::json toJson(const NecessaryResult& r) {
  nlohmann::json j{{"holds", r.holds}};
  j["firstFailingR"] = r.firstFailingR ? nlohmann::json(*r.firstFailingR) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json toJson(const BoundsReport& r) {
  nlohmann::json j{{"N", r.N},
                   {"rank", r.rank},
                   {"flennerK", r.flennerK},
                   {"discriminant", integerJson(r.discriminant)},
                   {"tightClosureBound", rationalJson(r.tightClosureBound)},
                   {"heinApplicable", r.heinApplicable},
                   {"appendixStable", toString(r.appendixStable)},
                   {"notes", r.notes},
                   {"statement", r.statement}};
  j["bogomolovMinDegree"] = r.bogomolovMinDegree ? integerJson(*r.bogomolovMinDegree) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json toJson(const LineTestResult& r) {
  nlohmann::json j{{"outcome", toString(r.outcome)},
                   {"method", r.method},
                   {"trialsUsed", r.trialsUsed},
                   {"oneSided", r.outcome == LineOutcome::ProbablyNo}};
  if (r.witness) {
    nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
    for (const auto& x : r.witness->a()) a.push_back(rationalJson(x));
    for (const auto& x : r.witness->b()) b.push_back(rationalJson(x));
    j["witness"] = {{"a", std::move(a)}, {"b", std::move(b)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

nlohmann::json toJson(const SearchResult& r) {
  nlohmann::json j{{"status", toString(r.status)}, {"nodes", r.nodes}};
  if (r.family) {
    nlohmann::json ms = nlohmann::json::array();
    for (const auto& m : *r.family) ms.push_back(toJson(m));
    j["family"] = {{"variables", r.family->variables()}, {"monomials", std::move(ms)}};
  } else {
    j["family"] = nullptr;
  }
  j["verdict"] = r.verdict ? toJson(*r.verdict) : nlohmann::json(nullptr);
  return j;
}

}  // namespace syzstab::cli
