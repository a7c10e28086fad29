#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "syzstab/arith.hpp"

namespace syzstab::linalg {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// Sparse integer vector, entries sorted by index, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Integer>>;

/// Rank of a dense integer matrix by fraction-free (Bareiss) elimination.
std::size_t bareissRank(IntMatrix m);

/// Rank of a dense rational matrix; rows are scaled to integers first.
std::size_t rank(const RatMatrix& m);

/// Basis of the right kernel {x : m x = 0}, one vector per free column, in
/// reduced form (the free coordinate is 1, other free coordinates 0).
std::vector<std::vector<Rational>> nullspace(const RatMatrix& m, std::size_t columns);

/// Echelon basis grown one vector at a time over the integers. Each stored
/// vector is primitive (content 1); reduction is fraction-free.
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(std::size_t dimension);

  /// Reduces `v` against the basis; stores and returns true if independent.
  bool insert(SparseVector v);

  std::size_t rank() const noexcept { return basis_.size(); }
  std::size_t dimension() const noexcept { return pivotOf_.size(); }

 private:
  std::vector<SparseVector> basis_;
  std::vector<std::optional<std::size_t>> pivotOf_;  // lead index -> basis slot
};

}  // namespace syzstab::linalg
