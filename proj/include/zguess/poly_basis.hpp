#pragma once

// Polynomial bases b_0, b_1, ... used to express recurrence coefficients.
// Every b_j has exact degree j and is integer-valued at integer points.

#include <optional>
#include <string>
#include <string_view>

#include "zguess/numeric.hpp"

namespace zguess {

enum class BasisKind {
  kStandard,          // x^j
  kShiftedStandard,   // (x + s)^j
  kBinomial,          // C(x + j, j)
  kShiftedBinomial,   // C(x + s + j, j)
};

struct BasisFamily {
  BasisKind kind = BasisKind::kStandard;
  long shift = 0;  // ignored by the unshifted kinds

  static BasisFamily standard() { return {BasisKind::kStandard, 0}; }
  static BasisFamily shifted_standard(long s) { return {BasisKind::kShiftedStandard, s}; }
  static BasisFamily binomial(long s = 0) { return {BasisKind::kBinomial, s}; }
  static BasisFamily shifted_binomial(long s) { return {BasisKind::kShiftedBinomial, s}; }

  /// Effective shift added to x (0 for the unshifted kinds).
  long effective_shift() const {
    return (kind == BasisKind::kShiftedStandard || kind == BasisKind::kShiftedBinomial) ? shift : 0;
  }

  bool operator==(const BasisFamily& o) const {
    return kind == o.kind && effective_shift() == o.effective_shift();
  }
};

/// Shift used by default for order r: floor(r / 2).
inline long default_shift(std::size_t order) { return static_cast<long>(order / 2); }

/// The four families in the order they are tried by default.
std::vector<BasisFamily> default_families(std::size_t order);

/// CLI name: standard, shifted, binomial, shifted-binomial.
std::string_view basis_name(BasisKind kind);
std::optional<BasisKind> parse_basis_name(std::string_view name);

/// Exact value of b_j(n); 0^0 = 1.
Int eval_basis(const BasisFamily& f, unsigned j, const Int& n);

/// Power-basis coefficients (constant term first) of b_j.
RatVector basis_polynomial(const BasisFamily& f, unsigned j);

/// Expands sum_j coeffs[j] b_j(x) in powers of x (constant term first);
/// the result has coeffs.size() entries.
RatVector to_standard(const BasisFamily& f, const RatVector& coeffs);

}  // namespace zguess
