#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syzstab/monomial.hpp"
#include "syzstab/slope.hpp"

namespace syzstab {

/// A subfamily J (|J| >= 2) together with its gcd and the slope
/// (d_J - sum_{i in J} d_i) / (|J| - 1) of its syzygy subsheaf.
struct SubsetWitness {
  std::vector<std::size_t> indices;
  Monomial gcdMonomial;
  Integer gcdDegree;
  Slope slope;

  friend bool operator==(const SubsetWitness&, const SubsetWitness&) = default;
};

/// A nonzero global section of Syz(m): it spans a rank-one subsheaf
/// O(-twist) of slope -twist.
struct SectionWitness {
  long twist = 0;
  Integer dimension;
  Slope subsheafSlope;

  friend bool operator==(const SectionWitness&, const SectionWitness&) = default;
};

enum class VerdictKind { Stable, SemistableNotStable, Unstable, Inconclusive };

std::string_view toString(VerdictKind kind);

struct StabilityVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  /// Destabilizing subfamily (Unstable) or equality subfamily (SemistableNotStable).
  std::optional<SubsetWitness> witness;
  /// Section-based witness from the low-rank criteria.
  std::optional<SectionWitness> section;
  /// Identifiers of the criteria that fired, in order.
  std::vector<std::string> notes;

  bool semistable() const noexcept {
    return kind == VerdictKind::Stable || kind == VerdictKind::SemistableNotStable;
  }
};

}  // namespace syzstab
