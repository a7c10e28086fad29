#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "syzstab/monomial.hpp"
#include "syzstab/verdict.hpp"

namespace syzstab {

/// Looks for n monomials of degree d in N+1 variables with a semistable
/// (or stable) syzygy bundle.
struct SearchSpec {
  long N = 2;
  long d = 1;
  std::size_t n = 2;
  /// Maximum number of visited search nodes.
  std::uint64_t budget = 5'000'000;
  bool requireStable = false;
  /// Only accept families that are primary after removing their common factor.
  bool enforcePrimary = true;
  /// Cut partial families that already violate the equal-degree inequality.
  bool prune = true;
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };
std::string_view toString(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<MonomialFamily> family;
  std::optional<StabilityVerdict> verdict;
  std::uint64_t nodes = 0;
};

/// Lexicographic backtracking over n-subsets of the degree-d monomials, taken
/// in descending lex order. The first accepted family is returned, so the
/// answer is deterministic and independent of pruning.
SearchResult findSemistableFamily(const SearchSpec& spec);

}  // namespace syzstab
