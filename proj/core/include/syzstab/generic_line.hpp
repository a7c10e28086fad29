#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "syzstab/arith.hpp"
#include "syzstab/linalg.hpp"
#include "syzstab/polynomial.hpp"

namespace syzstab {

/// Linear specialization X_j -> a_j U + b_j V onto the binary forms K[U,V].
class LineMap {
 public:
  /// Throws when a and b are proportional (the image would be one-variable).
  LineMap(std::vector<Rational> a, std::vector<Rational> b);

  std::size_t variables() const noexcept { return a_.size(); }
  const std::vector<Rational>& a() const noexcept { return a_; }
  const std::vector<Rational>& b() const noexcept { return b_; }

  /// Whether (a, b) span a plane; the constructor requires this.
  static bool independent(const std::vector<Rational>& a, const std::vector<Rational>& b);

 private:
  std::vector<Rational> a_;
  std::vector<Rational> b_;
};

/// Row i holds the coefficients of the image of f_i in the basis
/// U^k V^{d-k}, k = 0..d. All members must share the degree d.
linalg::RatMatrix restrictToLine(const PolyFamily& family, const LineMap& line);

enum class LineOutcome { CertifiedYes, ProbablyNo, CertifiedNo };
std::string_view toString(LineOutcome o);

struct LineTestOptions {
  std::size_t trials = 64;
  std::uint64_t seed = 0;
  /// Expand all n x n minors symbolically when sampling fails (n <= 5, N <= 3).
  bool exhaustive = false;
};

struct LineTestResult {
  LineOutcome outcome = LineOutcome::ProbablyNo;
  std::optional<LineMap> witness;
  /// Trial index of the witness, or the number of trials spent.
  std::size_t trialsUsed = 0;
  /// How the answer was reached: "sampling", "too-many-forms", "minors".
  std::string_view method = "sampling";
};

/// Searches for a line on which the restricted forms are linearly independent.
/// A CertifiedYes carries a witness whose restriction has exact rank n.
LineTestResult lineIndependenceTest(const PolyFamily& family, const LineTestOptions& options = {});

/// Largest sizes accepted by the symbolic minor expansion.
inline constexpr std::size_t kExhaustiveMaxForms = 5;
inline constexpr std::size_t kExhaustiveMaxN = 3;

}  // namespace syzstab
