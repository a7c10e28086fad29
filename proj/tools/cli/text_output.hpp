#pragma once

#include <span>
#include <string>

#include "syzstab/generic_line.hpp"
#include "syzstab/monomial_stability.hpp"
#include "syzstab/numeric_bounds.hpp"
#include "syzstab/search.hpp"
#include "syzstab/verdict.hpp"

namespace syzstab::cli {

/// "-15/2 (-7.5)": the exact fraction followed by a decimal approximation.
std::string fractionText(const Rational& q);
std::string fractionText(const Slope& s);

/// "{4, 5}" with members numbered from 1.
std::string indicesText(std::span<const std::size_t> indices);

std::string witnessText(const SubsetWitness& w);
std::string verdictText(const StabilityVerdict& v);
std::string boundsText(const BoundsReport& r);
std::string lineTestText(const LineTestResult& r);
std::string searchText(const SearchResult& r);

}  // namespace syzstab::cli
