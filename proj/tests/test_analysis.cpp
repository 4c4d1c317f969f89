#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "zguess/analysis.hpp"
#include "zguess/guesser.hpp"

using namespace zguess;

namespace {

// Independent transcription of the estimate in the log2 domain.
double estimate_oracle(std::size_t r, std::size_t d, std::size_t k, double a, double c0, double cd) {
  double log_fact_prod = 0;
  for (std::size_t i = 1; i <= k; ++i) log_fact_prod += std::lgamma(static_cast<double>(i) + 1) / std::log(2.0);
  const double kk = static_cast<double>(k);
  const double inner = kk * (std::log2(a) + std::log2(c0)) + kk * (kk + 1) / 2 * std::log2(cd) +
                       static_cast<double>(d) * (log_fact_prod - std::log2(kk));
  return inner / (static_cast<double>((r + 1) * (d + 1)) - kk);
}

// Nonzero x with |x_i| <= bound and m x = 0, by enumeration.
bool kernel_vector_within(const IntMatrix& m, long bound) {
  const std::size_t n = m.cols();
  std::vector<long> x(n, -bound);
  for (;;) {
    bool zero = std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
    if (!zero) {
      IntVector v(x.begin(), x.end());
      if (oracle::annihilates(m, v)) return true;
    }
    std::size_t i = n;
    bool more = false;
    while (i-- > 0) {
      if (x[i] < bound) {
        ++x[i];
        more = true;
        break;
      }
      x[i] = -bound;
    }
    if (!more) return false;
  }
}

}  // namespace

TEST_CASE("soft bound") {
  CHECK(std::abs(soft_bound(4, 0) - 4.22) < 0.01);
  CHECK(std::abs(soft_bound(8, 0) - 9.00) < 0.01);
  CHECK(std::abs(soft_bound(8, 6) - 15.26) < 0.01);
  for (double r = 1; r <= 8; ++r)
    for (double d = 0; d < 6; d += 0.5) {
      CHECK(soft_bound(r, d + 0.5) > soft_bound(r, d));
      CHECK(soft_bound(r + 1, d) > soft_bound(r, d));
    }
}

TEST_CASE("Bombieri-Vaaler bound") {
  BvBound one = bv_bound(IntMatrix{{1, 1}});
  CHECK(one.value() == doctest::Approx(std::sqrt(2.0)));
  CHECK(one.g == 1);
  CHECK(one.g_exact);
  CHECK(one.max_sup_norm() == 1);

  BvBound two = bv_bound(IntMatrix{{2, 2}});
  CHECK(two.g == 2);
  CHECK(two.value() == doctest::Approx(std::sqrt(2.0)));
  BvBound forced = bv_bound(IntMatrix{{2, 2}}, Int(1));
  CHECK(forced.value() == doctest::Approx(std::sqrt(8.0)));

  CHECK_THROWS_AS(bv_bound(IntMatrix{{1, 2}, {2, 4}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(bv_bound(IntMatrix{{1, 2}, {2, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(bv_bound(IntMatrix{{1, 2, 3}, {2, 4, 6}}), std::invalid_argument);

  // log2 of sqrt(det M M^T)^(1/(m-n)) for (1 1 1): sqrt(3)^(1/2).
  CHECK(bv_exact_log2(IntMatrix{{1, 1, 1}}) == doctest::Approx(std::log2(3.0) / 4));
}

TEST_CASE("a kernel vector exists within the bound") {
  oracle::Rng rng(53);
  int checked = 0;
  while (checked < 25) {
    IntMatrix m = oracle::random_matrix(rng, 2, 4, 5);
    if (oracle::rank_naive(m) < 2) continue;
    BvBound b = bv_bound(m);
    if (b.max_sup_norm() > 6) continue;  // keep the enumeration small
    Int g = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) g = zguess::gcd(g, m(0, i) * m(1, j) - m(0, j) * m(1, i));
    CHECK(b.g == g);
    CHECK(kernel_vector_within(m, b.max_sup_norm().get_si()));
    ++checked;
  }
}

TEST_CASE("bitsize estimate") {
  const GenericModel m{3, 2, 16, 7};
  const double est = bv_bitsize_estimate(m, Int(1000), Int(300), Int(20000));
  CHECK(est == doctest::Approx(estimate_oracle(3, 2, 7, 1000, 300, 20000)));

  const GenericModel m0{4, 0, 16, 1};
  CHECK(bv_bitsize_estimate(m0, Int(5), Int(7), Int(11)) ==
        doctest::Approx((std::log2(5.0) + std::log2(7.0) + std::log2(11.0)) / 4));

  // The k(k-1)/2 variant differs by k log2(cd) / (m - k).
  const double alt = bv_bitsize_estimate(m, Int(1000), Int(300), Int(20000), CdExponent::kKMinusOne);
  CHECK(est - alt == doctest::Approx(7 * std::log2(20000.0) / 5));

  // Increasing magnitudes (larger ell) increases the estimate.
  double prev = -1e300;
  for (unsigned ell = 6; ell <= 60; ell += 6) {
    const Int big = power(Int(2), ell);
    const double e = bv_bitsize_estimate(GenericModel{3, 2, ell, 7}, big, big, big);
    CHECK(e > prev);
    prev = e;
  }

  CHECK_THROWS_AS(bv_bitsize_estimate(GenericModel{1, 0, 16, 2}, Int(2), Int(2), Int(2)), std::domain_error);
  CHECK_THROWS_AS(bv_bitsize_estimate(GenericModel{1, 0, 16, 3}, Int(2), Int(2), Int(2)), std::invalid_argument);
}

TEST_CASE("random recurrences") {
  const GenericModel m{2, 1, 8, 6};
  RandomInstance a = random_recurrence(m, 42);
  RandomInstance b = random_recurrence(m, 42);
  CHECK(a.rec == b.rec);
  CHECK(a.initial == b.initial);
  CHECK(format(a.rec) == "(-102n-70)*a(n) + (-110n-56)*a(n+1) + (190n+157)*a(n+2) = 0");
  CHECK(a.initial == to_int_vector({-54, 116}));
  CHECK_FALSE(random_recurrence(m, 43).rec == a.rec);

  const long lo = -(1L << 8) + 1, hi = 1L << 8;
  bool hit_lo = false, hit_hi = false;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    RandomInstance inst = random_recurrence(GenericModel{2, 1, 8, 4}, seed);
    for (std::size_t i = 0; i <= 2; ++i)
      for (std::size_t j = 0; j <= 1; ++j) {
        const Int& c = inst.rec.coeff(i, j);
        CHECK((c >= lo && c <= hi));
        hit_lo |= c == lo;
        hit_hi |= c == hi;
      }
    for (const auto& x : inst.initial) CHECK((x >= lo && x <= hi));
    for (long n = 0; n < 4; ++n) CHECK(inst.rec.poly_at(2, n) != 0);
  }
  CHECK(hit_lo);
  CHECK(hit_hi);
}

TEST_CASE("generic matrix is the scaled guess matrix") {
  const GenericModel m{2, 2, 6, 6};
  RandomInstance inst = random_recurrence(m, 7);
  SequenceData data = unroll_instance(inst, m.last_index());
  IntMatrix g = generic_matrix(inst, m.rows);
  CHECK(g.rows() == m.rows);
  CHECK(g.cols() == m.cols());
  GuessProblem p;
  p.data = data;
  p.order = 2;
  CHECK(lattice_equal(integer_kernel(g), integer_kernel(build_matrix(p, 2).m)));
  CHECK(oracle::annihilates(g, inst.rec.to_vector()));
}

TEST_CASE("experiment") {
  ExperimentConfig cfg;
  cfg.orders = {1, 2};
  cfg.degrees = {0, 1};
  cfg.ell = 8;
  cfg.trials = 3;
  cfg.seed = 5;
  ExperimentReport a = generic_experiment(cfg);
  cfg.threads = 3;
  ExperimentReport b = generic_experiment(cfg);
  CHECK(experiment_csv(a) == experiment_csv(b));
  CHECK(a.rows.size() == 12);
  CHECK(a.medians.size() == 4);
  CHECK(experiment_csv(a).rfind("r,d,trial,minN\n", 0) == 0);
  for (const auto& row : a.rows) {
    REQUIRE(row.min_n);
    CHECK(*row.min_n >= row.order);
  }
}

TEST_CASE("brute force against the naive enumeration") {
  BruteForceSpec s;
  s.order = 2;
  s.degree = 1;
  s.coeff_bound = 1;
  s.init_bound = 1;
  s.horizon = 6;
  s.target_index = 2;
  s.target_value = 1;
  s.reference = IntVector(7, Int(1));
  s.keep = 1000;
  BruteForceResult r = brute_force_single_term(s);
  auto o = oracle::naive_brute_force(2, 1, 1, 1, 6, 2, Int(1), IntVector(7, Int(1)));
  CHECK(r.recurrences == o.recurrences);
  CHECK(r.integral == o.integral);
  CHECK(r.count == o.count);
  CHECK(r.per_index == o.per_index);
  CHECK(r.count == 75);
  CHECK(r.matches.size() == r.count);
  for (const auto& mt : r.matches) {
    RatVector init(mt.initial.begin(), mt.initial.end());
    RatVector more = unroll(mt.rec, init, 5);
    CHECK(more[0] == 1);
    for (const auto& x : more) CHECK(is_integer(x));
  }

  s.threads = 4;
  BruteForceResult par = brute_force_single_term(s);
  CHECK(par.count == r.count);
  CHECK(par.per_index == r.per_index);

  s.target_value = 1000000007;
  CHECK(brute_force_single_term(s).count == 0);

  s.coeff_bound = 9;
  s.init_bound = 9;
  CHECK_THROWS_AS(brute_force_single_term(s), BudgetExceeded);
  CHECK(s.candidate_count() == doctest::Approx(std::pow(19.0, 6) * 100));
}
