#include <doctest.h>

#include "oracles.hpp"
#include "zguess/analysis.hpp"
#include "zguess/recurrence.hpp"

using namespace zguess;

namespace {

const Recurrence kCatalanSum({to_int_vector({6, 4}), to_int_vector({-9, -5}), to_int_vector({3, 1})});
const Recurrence kDelannoy({to_int_vector({1, 1}), to_int_vector({-9, -6}), to_int_vector({2, 1})});

RatVector rats(std::initializer_list<long> v) { return RatVector(v.begin(), v.end()); }

Recurrence random_rec(oracle::Rng& rng, std::size_t r, std::size_t d, long bound) {
  for (;;) {
    std::vector<IntVector> g(r + 1, IntVector(d + 1));
    for (auto& row : g)
      for (auto& c : row) c = rng.uniform(-bound, bound);
    if (!is_zero(g[r])) return Recurrence(g);
  }
}

}  // namespace

TEST_CASE("from_vector") {
  Recurrence rec = Recurrence::from_vector(to_int_vector({-4, 5, -1, -6, 9, -3}), 2, 1, BasisFamily::standard());
  CHECK(rec.grid() == kCatalanSum.grid());
  CHECK(rec == kCatalanSum);

  Recurrence unit = Recurrence::from_vector(to_int_vector({0, 1}), 1, 0, BasisFamily::standard());
  CHECK(unit.coeff(1, 0) == 1);
  CHECK(unit.coeff(0, 0) == 0);

  CHECK_THROWS_AS(Recurrence::from_vector(IntVector(6, Int(0)), 2, 1, BasisFamily::standard()),
                  std::invalid_argument);
  CHECK_THROWS_AS(Recurrence::from_vector(to_int_vector({1, 2, 3}), 2, 1, BasisFamily::standard()),
                  std::invalid_argument);
}

TEST_CASE("from_vector over other families matches pointwise conversion") {
  oracle::Rng rng(23);
  const std::vector<BasisFamily> fams{BasisFamily::binomial(), BasisFamily::shifted_standard(1),
                                      BasisFamily::shifted_binomial(2)};
  for (const BasisFamily& f : fams) {
    for (int t = 0; t < 10; ++t) {
      const std::size_t r = 2, d = 2;
      IntVector v((r + 1) * (d + 1));
      for (auto& x : v) x = rng.uniform(-9, 9);
      if (is_zero(v)) continue;
      Recurrence rec = Recurrence::from_vector(v, r, d, f);
      CHECK(rec.origin() == f);
      // sum_j v[(d-j)(r+1)+i] b_j(n) must be proportional to p_i(n).
      std::optional<Rat> ratio;
      for (long n = 0; n <= static_cast<long>(d + r); ++n)
        for (std::size_t i = 0; i <= r; ++i) {
          Int direct = 0;
          for (std::size_t j = 0; j <= d; ++j)
            direct += v[(d - j) * (r + 1) + i] * eval_basis(f, static_cast<unsigned>(j), n);
          Int mine = rec.poly_at(i, n);
          if (mine == 0) {
            CHECK(direct == 0);
            continue;
          }
          Rat q(direct, mine);
          q.canonicalize();
          if (!ratio) ratio = q;
          CHECK(q == *ratio);
        }
    }
  }
}

TEST_CASE("normalization") {
  oracle::Rng rng(29);
  for (int t = 0; t < 30; ++t) {
    IntVector v(6);
    for (auto& x : v) x = rng.uniform(-20, 20);
    if (is_zero(v)) continue;
    Recurrence a = Recurrence::from_vector(v, 2, 1, BasisFamily::standard());
    CHECK(content(a.to_vector()) == 1);
    CHECK(a.normalized().grid() == a.grid());
    for (long lambda : {-3L, 2L, 7L}) {
      IntVector w = v;
      for (auto& x : w) x *= lambda;
      CHECK(Recurrence::from_vector(w, 2, 1, BasisFamily::standard()).grid() == a.grid());
    }
  }
  Recurrence scaled({to_int_vector({-12, -8}), to_int_vector({18, 10}), to_int_vector({-6, -2})});
  CHECK(scaled.normalized().grid() == kCatalanSum.grid());
  CHECK(kCatalanSum.sup_norm() == 9);
  CHECK(kCatalanSum.to_vector() == to_int_vector({4, -5, 1, 6, -9, 3}));
}

TEST_CASE("unrolling") {
  RatVector d = unroll(kDelannoy, rats({1, 3}), 7);
  REQUIRE(d.size() == 7);
  CHECK(d.back() == 265729);
  IntVector ref = oracle::central_delannoy(9);
  for (std::size_t i = 0; i < 7; ++i) CHECK(d[i] == Rat(ref[i + 2]));

  Recurrence constant({to_int_vector({-1}), to_int_vector({1})});
  CHECK(unroll(constant, rats({5}), 4) == rats({5, 5, 5, 5}));

  CHECK(unroll(kCatalanSum, rats({1, 2}), 5) == rats({4, 9, 23, 65, 197}));
  IntVector sums = oracle::catalan_sums(7);
  CHECK(sums.back() == 197);

  // p_r(n) = n - 2 vanishes at the step producing a(3).
  Recurrence bad({to_int_vector({1, 0}), to_int_vector({-2, 1})});
  try {
    unroll(bad, rats({1}), 5);
    FAIL("expected LeadingCoefficientVanishes");
  } catch (const LeadingCoefficientVanishes& e) {
    CHECK(e.n() == 2);
  }
}

TEST_CASE("fitting data") {
  CHECK(fits_data(kCatalanSum, SequenceData::from_longs({1, 2, 4, 9, 23, 65})));
  CHECK_FALSE(fits_data(kCatalanSum, SequenceData::from_longs({1, 2, 4, 9, 23, 66})));
  CHECK_THROWS_AS(fits_data(kCatalanSum, SequenceData::from_longs({1, 2})), std::invalid_argument);
  CHECK(fits_data(kCatalanSum, SequenceData::from_longs({1, 2, 4})));

  oracle::Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    Recurrence rec = random_rec(rng, 2, 2, 9);
    RatVector init{Rat(rng.uniform(-5, 5)), Rat(rng.uniform(-5, 5))};
    RatVector more;
    try {
      more = unroll(rec, init, 8);
    } catch (const LeadingCoefficientVanishes&) {
      continue;
    }
    init.insert(init.end(), more.begin(), more.end());
    CHECK(fits_data(rec, SequenceData(init)));
  }
}

TEST_CASE("integrality check") {
  Recurrence reciprocal({to_int_vector({-1, 0}), to_int_vector({1, 1})});
  CHECK_FALSE(integrality_check(reciprocal, SequenceData::from_longs({1, 1}), 3));
  CHECK(integrality_check(kCatalanSum, SequenceData::from_longs({1, 2, 4, 9, 23, 65}), 10));
  CHECK(integrality_check(kDelannoy, SequenceData::from_longs({1, 3}), 10));
  Recurrence vanishing({to_int_vector({1, 0}), to_int_vector({-3, 1})});
  CHECK_FALSE(integrality_check(vanishing, SequenceData::from_longs({1}), 5));
  CHECK_THROWS_AS(integrality_check(kDelannoy, SequenceData(RatVector{Rat(1, 2), Rat(1)}), 3),
                  std::invalid_argument);
}

TEST_CASE("formatting and parsing") {
  CHECK(format(kCatalanSum) == "(4n+6)*a(n) + (-5n-9)*a(n+1) + (n+3)*a(n+2) = 0");
  CHECK(format(Recurrence({to_int_vector({-1}), to_int_vector({2})})) == "(-1)*a(n) + (2)*a(n+1) = 0");
  CHECK(parse_recurrence("(4n+6)*a(n) + (-5n-9)*a(n+1) + (n+3)*a(n+2) = 0") == kCatalanSum);
  CHECK(parse_recurrence("(n^2-1)*a(n+1) = 0").coeff(1, 2) == 1);
  CHECK_THROWS_AS(parse_recurrence("(4n+6)*b(n) = 0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_recurrence("(4n+6)*a(n)"), std::invalid_argument);

  oracle::Rng rng(37);
  for (int t = 0; t < 50; ++t) {
    const auto r = static_cast<std::size_t>(rng.uniform(0, 4));
    const auto d = static_cast<std::size_t>(rng.uniform(0, 4));
    Recurrence rec = random_rec(rng, r, d, 30);
    CHECK(parse_recurrence(format(rec)) == rec);
  }
}

TEST_CASE("denominators divide the product of leading values") {
  GenericModel model{3, 2, 6, 10};
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RandomInstance inst = random_recurrence(model, seed);
    SequenceData s = unroll_instance(inst, model.last_index());
    Int v = 1;
    for (std::size_t n = model.order; n < s.size(); ++n) {
      v *= -inst.rec.poly_at(model.order, Int(n - model.order));
      CHECK(v % s.terms[n].get_den() == 0);
    }
  }
}

TEST_CASE("sequence data") {
  SequenceData s = SequenceData::from_longs({1, 2, 3}, 4);
  CHECK(s.last_index() == 2);
  CHECK(s.offset == 4);
  CHECK(s.integral());
  CHECK(s.prefix(2).terms == rats({1, 2}));
  CHECK_FALSE(SequenceData(RatVector{Rat(1, 2)}).integral());
}
