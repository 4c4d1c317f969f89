#include "zguess/poly_basis.hpp"

#include <stdexcept>

namespace zguess {

std::vector<BasisFamily> default_families(std::size_t order) {
  const long s = default_shift(order);
  return {BasisFamily::shifted_standard(s), BasisFamily::standard(), BasisFamily::binomial(),
          BasisFamily::shifted_binomial(s)};
}

std::string_view basis_name(BasisKind kind) {
  switch (kind) {
    case BasisKind::kStandard: return "standard";
    case BasisKind::kShiftedStandard: return "shifted";
    case BasisKind::kBinomial: return "binomial";
    case BasisKind::kShiftedBinomial: return "shifted-binomial";
  }
  return "?";
}

std::optional<BasisKind> parse_basis_name(std::string_view name) {
  for (auto k : {BasisKind::kStandard, BasisKind::kShiftedStandard, BasisKind::kBinomial,
                 BasisKind::kShiftedBinomial}) {
    if (basis_name(k) == name) return k;
  }
  return std::nullopt;
}

Int eval_basis(const BasisFamily& f, unsigned j, const Int& n) {
  const Int x = n + f.effective_shift();
  switch (f.kind) {
    case BasisKind::kStandard:
    case BasisKind::kShiftedStandard:
      return power(x, j);
    case BasisKind::kBinomial:
    case BasisKind::kShiftedBinomial:
      return binomial(x + j, j);
  }
  throw std::logic_error("eval_basis: unknown basis kind");
}

RatVector basis_polynomial(const BasisFamily& f, unsigned j) {
  const long s = f.effective_shift();
  // product of linear factors (x + a), then scaled
  RatVector poly{Rat(1)};
  auto multiply_linear = [&poly](const Int& a) {
    RatVector next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i] * a;
      next[i + 1] += poly[i];
    }
    poly = std::move(next);
  };
  switch (f.kind) {
    case BasisKind::kStandard:
    case BasisKind::kShiftedStandard:
      for (unsigned t = 0; t < j; ++t) multiply_linear(Int(s));
      break;
    case BasisKind::kBinomial:
    case BasisKind::kShiftedBinomial: {
      // C(x+s+j, j) = prod_{t=1..j} (x + s + t) / j!
      Int fact = 1;
      for (unsigned t = 1; t <= j; ++t) {
        multiply_linear(Int(s + static_cast<long>(t)));
        fact *= t;
      }
      for (auto& c : poly) c /= fact;
      break;
    }
  }
  return poly;
}

RatVector to_standard(const BasisFamily& f, const RatVector& coeffs) {
  RatVector out(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    RatVector bj = basis_polynomial(f, static_cast<unsigned>(j));
    for (std::size_t i = 0; i < bj.size(); ++i) out[i] += coeffs[j] * bj[i];
  }
  return out;
}

}  // namespace zguess
