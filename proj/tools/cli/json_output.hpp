#pragma once

#include <nlohmann/json.hpp>

#include "syzstab/generic_line.hpp"
#include "syzstab/monomial_stability.hpp"
#include "syzstab/numeric_bounds.hpp"
#include "syzstab/search.hpp"
#include "syzstab/sections.hpp"
#include "syzstab/verdict.hpp"

namespace syzstab::cli {

inline constexpr int kSchemaVersion = 1;

/// JSON number when the value fits in int64, otherwise a decimal string.
nlohmann::json integerJson(const Integer& v);
/// {"num": ..., "den": ...} with integerJson components.
nlohmann::json rationalJson(const Rational& q);

nlohmann::json toJson(const Monomial& m);
nlohmann::json toJson(const Slope& s);
nlohmann::json toJson(const SubsetWitness& w);
nlohmann::json toJson(const SectionWitness& w);
nlohmann::json toJson(const StabilityVerdict& v);
nlohmann::json toJson(const MaxSlopeResult& r);
nlohmann::json toJson(const SameDegreeResult& r);
nlohmann::json toJson(const SectionMapDims& d);
nlohmann::json toJson(const NecessaryResult& r);
nlohmann::json toJson(const BoundsReport& r);
nlohmann::json toJson(const LineTestResult& r);
nlohmann::json toJson(const SearchResult& r);

}  // namespace syzstab::cli
