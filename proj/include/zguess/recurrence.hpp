#pragma once

// Linear recurrences with polynomial coefficients,
//   sum_{i=0}^{r} sum_{j=0}^{d} c_{i,j} n^j a(n+i) = 0,
// stored with integer coefficients in the power basis.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zguess/numeric.hpp"
#include "zguess/poly_basis.hpp"

namespace zguess {

/// Exact terms a_0..a_N of a sequence; `offset` is the index of the first
/// term in the source (e.g. an OEIS b-file). Recurrences are expressed in the
/// re-indexed variable n = index - offset.
struct SequenceData {
  RatVector terms;
  long offset = 0;

  SequenceData() = default;
  SequenceData(RatVector t, long off = 0);

  static SequenceData from_ints(const IntVector& values, long off = 0);
  static SequenceData from_longs(std::initializer_list<long> values, long off = 0);

  /// N, the index of the last term.
  std::size_t last_index() const { return terms.size() - 1; }
  std::size_t size() const { return terms.size(); }
  bool integral() const;
  SequenceData prefix(std::size_t count) const;
};

class Recurrence {
 public:
  /// grid[i][j] = c_{i,j}; all rows must have the same length. The grid is
  /// stored as given (no normalization).
  Recurrence(std::vector<IntVector> grid, BasisFamily origin = BasisFamily::standard());

  /// Interprets v in guess-matrix column order (degree-d block first, shift
  /// 0..r inside each block) over the family f, converts to the power basis,
  /// clears denominators, removes the content and fixes the sign.
  /// Throws std::invalid_argument for a zero vector or wrong length.
  static Recurrence from_vector(const IntVector& v, std::size_t order, std::size_t degree,
                                const BasisFamily& f);

  std::size_t order() const { return grid_.size() - 1; }
  std::size_t degree() const { return grid_.front().size() - 1; }
  const Int& coeff(std::size_t i, std::size_t j) const { return grid_[i][j]; }
  const std::vector<IntVector>& grid() const { return grid_; }
  const BasisFamily& origin() const { return origin_; }

  /// p_i(n) = sum_j c_{i,j} n^j.
  Int poly_at(std::size_t i, const Int& n) const;

  /// max |c_{i,j}|.
  Int sup_norm() const;

  /// Divides by the content and makes the leading coefficient of the
  /// highest nonvanishing p_i positive.
  Recurrence normalized() const;

  /// Coefficients as a flat vector in guess-matrix column order.
  IntVector to_vector() const;

  /// Equality of the recurrence operators: trailing zero shifts and powers
  /// are ignored, the origin family is not compared.
  bool operator==(const Recurrence& other) const;

 private:
  std::vector<IntVector> grid_;
  BasisFamily origin_;
};

/// Thrown by unroll when p_r(n) = 0 at the step that would produce a(n+r).
class LeadingCoefficientVanishes : public std::runtime_error {
 public:
  explicit LeadingCoefficientVanishes(long n);
  long n() const { return n_; }

 private:
  long n_;
};

/// Extends initial = a_0..a_{L-1} (L >= r) by `count` further terms and
/// returns only the new terms.
RatVector unroll(const Recurrence& rec, const RatVector& initial, std::size_t count);

/// True iff the recurrence holds at n = 0..N-r. Throws std::invalid_argument
/// when N < r.
bool fits_data(const Recurrence& rec, const SequenceData& data);

/// True iff the next t unrolled terms exist and are all integers. Needs only
/// r initial terms. Throws std::invalid_argument for non-integral data or
/// fewer than r terms.
bool integrality_check(const Recurrence& rec, const SequenceData& data, std::size_t t);

/// Renders e.g. "(4n+6)*a(n) + (-5n-9)*a(n+1) + (n+3)*a(n+2) = 0".
std::string format(const Recurrence& rec);

/// Inverse of format. Throws std::invalid_argument on malformed text.
Recurrence parse_recurrence(std::string_view text);

}  // namespace zguess
