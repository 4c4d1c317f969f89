#include <doctest.h>

#include "oracles.hpp"
#include "zguess/poly_basis.hpp"

using namespace zguess;

namespace {

// Horner evaluation of a power-basis polynomial.
Rat eval_power(const RatVector& c, const Rat& x) {
  Rat v = 0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
  return v;
}

const std::vector<BasisFamily> kAll{BasisFamily::standard(), BasisFamily::shifted_standard(2),
                                    BasisFamily::binomial(), BasisFamily::shifted_binomial(1)};

}  // namespace

TEST_CASE("basis values") {
  CHECK(eval_basis(BasisFamily::standard(), 1, 3) == 3);
  CHECK(eval_basis(BasisFamily::standard(), 0, 0) == 1);
  CHECK(eval_basis(BasisFamily::binomial(), 2, 3) == 10);
  CHECK(eval_basis(BasisFamily::shifted_standard(1), 2, 2) == 9);
  CHECK(eval_basis(BasisFamily::shifted_binomial(2), 3, 1) == oracle::choose(6, 3));
  CHECK(eval_basis(BasisFamily::shifted_standard(-1), 0, 1) == 1);  // 0^0
  CHECK(eval_basis(BasisFamily::standard(), 3, -2) == -8);
}

TEST_CASE("expansion in powers of x") {
  RatVector c{Rat(3), Rat(-2), Rat(5, 7)};
  CHECK(to_standard(BasisFamily::standard(), c) == c);
  CHECK(to_standard(BasisFamily::binomial(), {0, 0, 1}) == RatVector{1, Rat(3, 2), Rat(1, 2)});
  CHECK(to_standard(BasisFamily::shifted_standard(1), {0, 0, 1}) == RatVector{1, 2, 1});
  CHECK(basis_polynomial(BasisFamily::shifted_binomial(1), 1) == RatVector{2, 1});
}

TEST_CASE("expansion agrees with pointwise evaluation") {
  oracle::Rng rng(17);
  for (const BasisFamily& f : kAll) {
    for (int t = 0; t < 10; ++t) {
      const std::size_t d = static_cast<std::size_t>(rng.uniform(0, 6));
      RatVector c;
      for (std::size_t j = 0; j <= d; ++j) c.push_back(Rat(rng.uniform(-50, 50)));
      RatVector s = to_standard(f, c);
      REQUIRE(s.size() == d + 1);
      for (long x = -1; x <= static_cast<long>(d) + 1; ++x) {
        Rat direct = 0;
        for (std::size_t j = 0; j <= d; ++j) direct += c[j] * Rat(eval_basis(f, static_cast<unsigned>(j), x));
        CHECK(eval_power(s, Rat(x)) == direct);
      }
    }
  }
}

TEST_CASE("change of basis is triangular") {
  for (const BasisFamily& f : kAll) {
    for (unsigned j = 0; j <= 6; ++j) {
      RatVector p = basis_polynomial(f, j);
      REQUIRE(p.size() == j + 1);
      CHECK(p[j] != 0);
    }
  }
}

TEST_CASE("integer values at integer points") {
  for (const BasisFamily& f : kAll)
    for (unsigned j = 0; j <= 5; ++j)
      for (long n = -f.effective_shift(); n < 12; ++n) {
        Rat v = eval_power(basis_polynomial(f, j), Rat(n));
        CHECK(is_integer(v));
        CHECK(v.get_num() == eval_basis(f, j, n));
      }
}

TEST_CASE("names and defaults") {
  CHECK(basis_name(BasisKind::kShiftedStandard) == "shifted");
  CHECK(parse_basis_name("shifted-binomial") == BasisKind::kShiftedBinomial);
  CHECK(parse_basis_name("binomial") == BasisKind::kBinomial);
  CHECK_FALSE(parse_basis_name("legendre").has_value());
  CHECK(default_shift(5) == 2);
  auto fams = default_families(4);
  REQUIRE(fams.size() == 4);
  CHECK(fams[0] == BasisFamily::shifted_standard(2));
  CHECK(fams[1] == BasisFamily::standard());
  CHECK(fams[2] == BasisFamily::binomial());
  CHECK(fams[3] == BasisFamily::shifted_binomial(2));
  CHECK(BasisFamily::binomial(3) == BasisFamily::binomial());
}
