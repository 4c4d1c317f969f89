#pragma once

// LLL reduction of integer lattice bases, exact integral arithmetic only.

#include <cstddef>
#include <vector>

#include "zguess/numeric.hpp"

namespace zguess {

/// Lovász parameter delta in (1/4, 1] and size-reduction bound eta in
/// [1/2, sqrt(delta)).
struct ReductionParams {
  Rat delta{99, 100};
  Rat eta{501, 1000};

  /// Throws std::invalid_argument when a parameter is out of range.
  void validate() const;
};

/// Linearly independent integer vectors of a common length.
class LatticeBasis {
 public:
  LatticeBasis() = default;

  /// Throws std::invalid_argument for ragged or dependent vectors.
  explicit LatticeBasis(std::vector<IntVector> vectors);

  /// Skips the independence check; for vectors that are independent by
  /// construction (HNF rows, LLL output).
  static LatticeBasis trusted(std::vector<IntVector> vectors);

  const std::vector<IntVector>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  std::size_t length() const { return vectors_.empty() ? 0 : vectors_.front().size(); }
  const IntVector& operator[](std::size_t i) const { return vectors_[i]; }

 private:
  std::vector<IntVector> vectors_;
};

class DependentVectors : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// LLL-reduces b. The result spans the same lattice, is size-reduced with
/// |mu| <= eta, satisfies the Lovász condition for delta, and every vector is
/// sign-normalized (first nonzero entry positive). Throws DependentVectors.
LatticeBasis lll_reduce(const LatticeBasis& b, const ReductionParams& p = {});

/// As lll_reduce on reduced_prefix followed by new_vectors, but starts the
/// reduction after the prefix, which must already be LLL-reduced for p.
LatticeBasis lll_reduce_with_prefix(const LatticeBasis& reduced_prefix,
                                    const std::vector<IntVector>& new_vectors,
                                    const ReductionParams& p = {});

struct GramSchmidtData {
  std::vector<RatVector> mu;  // mu[i][j], j < i
  RatVector norms;            // |b*_i|^2
};

/// Exact rational Gram-Schmidt data of a basis, independent of the reduction
/// code path.
GramSchmidtData gram_schmidt(const std::vector<IntVector>& vectors);

/// Checks size reduction and the Lovász condition from scratch.
bool is_lll_reduced(const std::vector<IntVector>& vectors, const ReductionParams& p = {});

/// Shortest nonzero vector among sum x_i b_i with |x_i| <= box, by exhaustive
/// enumeration. Ties are broken by the lexicographically smallest
/// sign-normalized coefficient vector. Throws std::invalid_argument when the
/// basis has more than 6 vectors or the box has more than 10^8 points.
IntVector shortest_vector_bruteforce(const LatticeBasis& b, long box = 20);

}  // namespace zguess
