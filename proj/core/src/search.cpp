#include "syzstab/search.hpp"

#include <set>

#include "syzstab/error.hpp"
#include "syzstab/monomial_stability.hpp"

namespace syzstab {

namespace {

class Backtracker {
 public:
  Backtracker(const SearchSpec& spec, std::vector<Monomial> candidates)
      : spec_(spec), candidates_(std::move(candidates)), degree_(spec.d) {}

  SearchResult run() {
    SearchResult result;
    if (descend(0)) {
      result.status = SearchStatus::Found;
      result.family = std::move(found_);
      result.verdict = std::move(verdict_);
    } else {
      result.status = exceeded_ ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  bool descend(std::size_t next) {
    if (chosen_.size() == spec_.n) return accept();
    const std::size_t missing = spec_.n - chosen_.size();
    for (std::size_t i = next; i + missing <= candidates_.size(); ++i) {
      if (++nodes_ > spec_.budget) {
        exceeded_ = true;
        return false;
      }
      chosen_.push_back(candidates_[i]);
      if (!(spec_.prune && violatesEqualDegree()) && descend(i + 1)) return true;
      chosen_.pop_back();
      if (exceeded_) return false;
    }
    return false;
  }

  bool accept() {
    MonomialFamily family(chosen_);
    // Two forms give a rank-one sheaf, decided without primality.
    if (spec_.enforcePrimary && spec_.n > 2 && !isPrimaryUpToCommonFactor(family)) return false;
    StabilityVerdict v = verdict(family);
    const bool ok = spec_.requireStable ? v.kind == VerdictKind::Stable : v.semistable();
    if (!ok) return false;
    found_ = std::move(family);
    verdict_ = std::move(v);
    return true;
  }

  // (s_nu - 1)(d - |g|) > (n - 1)(d - |nu|) for a meet nu of the partial family,
  // g its common factor. Both sides only move towards a violation as members
  // are added, so the whole subtree can be skipped.
  bool violatesEqualDegree() const {
    if (chosen_.size() < 2) return false;
    std::set<Monomial> closure;
    std::vector<Monomial> frontier;
    for (std::size_t i = 0; i < chosen_.size(); ++i)
      for (std::size_t j = i + 1; j < chosen_.size(); ++j) {
        Monomial m = meet(chosen_[i], chosen_[j]);
        if (closure.insert(m).second) frontier.push_back(std::move(m));
      }
    while (!frontier.empty()) {
      std::vector<Monomial> grown;
      for (const auto& g : frontier)
        for (const auto& f : chosen_) {
          Monomial m = meet(g, f);
          if (closure.insert(m).second) grown.push_back(std::move(m));
        }
      frontier = std::move(grown);
    }
    // The smallest closure element under divisibility is the common factor;
    // it is the meet of everything, so it has the least degree.
    Integer commonDegree = degree_;
    for (const auto& m : closure)
      if (m.degree() < commonDegree) commonDegree = m.degree();
    const Integer reduced = degree_ - commonDegree;
    const Integer nMinusOne = static_cast<unsigned long>(spec_.n - 1);
    for (const auto& nu : closure) {
      unsigned long s = 0;
      for (const auto& f : chosen_)
        if (nu.divides(f)) ++s;
      const Integer lhs = Integer(s - 1) * reduced;
      const Integer rhs = nMinusOne * (degree_ - nu.degree());
      if (lhs > rhs) return true;
    }
    return false;
  }

  const SearchSpec& spec_;
  std::vector<Monomial> candidates_;
  Integer degree_;
  std::vector<Monomial> chosen_;
  std::optional<MonomialFamily> found_;
  std::optional<StabilityVerdict> verdict_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

}  // namespace

std::string_view toString(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::Exhausted: return "Exhausted";
    case SearchStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "Exhausted";
}

SearchResult findSemistableFamily(const SearchSpec& spec) {
  if (spec.N < 1 || spec.d < 1) throw PreconditionError("search-spec", "need N >= 1 and d >= 1");
  if (spec.n < 2) throw PreconditionError("search-spec", "a family needs at least two monomials");
  auto candidates = monomialsOfDegree(static_cast<std::size_t>(spec.N + 1), spec.d);
  if (spec.n > candidates.size())
    throw PreconditionError("monomial-count", "n exceeds the number of monomials of degree d");
  return Backtracker(spec, std::move(candidates)).run();
}

}  // namespace syzstab
