#include "zguess/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>
#include <sstream>

#include "zguess/guesser.hpp"

namespace zguess {

void GenericModel::validate() const {
  if (ell < 1) throw std::invalid_argument("GenericModel: ell must be at least 1");
  if (rows < 1) throw std::invalid_argument("GenericModel: at least one row required");
}

double BvBound::value() const { return std::exp2(log2_value); }

Int BvBound::max_sup_norm() const {
  // widen by a relative 1e-9 before flooring
  const double v = std::exp2(log2_value) * (1 + 1e-9);
  if (!std::isfinite(v)) throw std::overflow_error("BvBound: value exceeds double range");
  return Int(std::floor(v));
}

BvBound bv_bound(const IntMatrix& m, std::optional<Int> g) {
  const std::size_t n = m.rows();
  const std::size_t cols = m.cols();
  if (n >= cols) throw std::invalid_argument("bv_bound: need fewer rows than columns");
  Int gd = gram_det(m);
  if (gd == 0) throw std::invalid_argument("bv_bound: matrix does not have full row rank");
  BvBound b;
  if (g) {
    if (*g <= 0) throw std::invalid_argument("bv_bound: g must be positive");
    b.g = *g;
    b.g_exact = true;
  } else {
    try {
      b.g = minor_gcd(m);
      b.g_exact = true;
    } catch (const MinorLimitExceeded&) {
      b.g = 1;
      b.g_exact = false;
    }
  }
  b.log2_value = (0.5 * log2_abs(gd) - log2_abs(b.g)) / static_cast<double>(cols - n);
  return b;
}

double bv_exact_log2(const IntMatrix& m) {
  const std::size_t k = m.rows();
  const std::size_t cols = m.cols();
  if (k >= cols) throw std::invalid_argument("bv_exact_log2: need fewer rows than columns");
  return 0.5 * log2_abs(gram_det(m)) / static_cast<double>(cols - k);
}

double bv_bitsize_estimate(const GenericModel& model, const Int& a_prev, const Int& c0,
                           const Int& cd, CdExponent form) {
  const double k = static_cast<double>(model.rows);
  const double m = static_cast<double>(model.cols());
  if (model.cols() == model.rows) throw std::domain_error("bv_bitsize_estimate: m == k");
  if (model.cols() < model.rows) throw std::invalid_argument("bv_bitsize_estimate: m < k");
  double log_fact_sum = 0;  // log2 prod_{i=1}^k i!
  for (std::size_t i = 1; i <= model.rows; ++i) log_fact_sum += std::lgamma(i + 1.0) / std::log(2.0);
  const double inner = k * (log2_abs(a_prev) + log2_abs(c0)) + k * (form == CdExponent::kKPlusOne ? k + 1 : k - 1) / 2 * log2_abs(cd) +
                       static_cast<double>(model.degree) * (log_fact_sum - std::log2(k));
  return inner / (m - k);
}

double soft_bound(double r, double d) {
  return 0.5 * (std::sqrt(8 * (r + 1) * (d + 1) + 49) - 7) + r - 1;
}

RandomInstance random_recurrence(const GenericModel& model, std::uint64_t seed) {
  model.validate();
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));
  const Int offset = (Int(1) << model.ell) - 1;
  auto draw = [&]() -> Int { return Int(rng.get_z_bits(model.ell + 1)) - offset; };
  const std::size_t r = model.order;
  for (;;) {
    std::vector<IntVector> grid(r + 1, IntVector(model.degree + 1));
    for (auto& row : grid)
      for (auto& c : row) c = draw();
    IntVector initial(r);
    for (auto& a : initial) a = draw();
    Recurrence rec(std::move(grid));
    bool ok = !is_zero(rec.grid()[r]);
    for (std::size_t n = 0; ok && n < model.rows; ++n) {
      ok = rec.poly_at(r, Int(static_cast<unsigned long>(n))) != 0;
    }
    if (ok) return RandomInstance{std::move(rec), std::move(initial)};
  }
}

SequenceData unroll_instance(const RandomInstance& inst, std::size_t last_index) {
  RatVector terms(inst.initial.begin(), inst.initial.end());
  const std::size_t r = inst.rec.order();
  if (last_index + 1 < r) throw std::invalid_argument("unroll_instance: fewer terms than initial values");
  RatVector more = unroll(inst.rec, terms, last_index + 1 - r);
  terms.insert(terms.end(), more.begin(), more.end());
  terms.resize(last_index + 1);
  return SequenceData(std::move(terms));
}

IntMatrix generic_matrix(const RandomInstance& inst, std::size_t rows) {
  const std::size_t r = inst.rec.order();
  const std::size_t d = inst.rec.degree();
  const std::size_t last = rows + r - 1;
  SequenceData data = unroll_instance(inst, last);
  const std::size_t width = r + 1;
  IntMatrix m(rows, width * (d + 1));
  Int v = 1;
  for (std::size_t i = 0; i < rows; ++i) {
    v *= -inst.rec.poly_at(r, Int(static_cast<unsigned long>(i)));  // v_{i+r}
    for (std::size_t t = 0; t <= d; ++t) {
      const Int power_it = power(Int(static_cast<unsigned long>(i)), static_cast<unsigned long>(t));
      for (std::size_t s = 0; s < width; ++s) {
        Rat e = data.terms[i + s] * v * power_it;
        if (!is_integer(e)) throw std::logic_error("generic_matrix: v_n is not a common denominator");
        m(i, (d - t) * width + s) = e.get_num();
      }
    }
  }
  return m;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

ExperimentRow run_trial(const ExperimentConfig& cfg, std::size_t r, std::size_t d, std::size_t trial) {
  const std::size_t classical_n = (r + 1) * (d + 2) - 2;  // (r+1)(d+2) <= N+2
  const std::size_t full_n = classical_n + cfg.extra_terms;
  GenericModel model{r, d, cfg.ell, full_n - r + 1};
  std::uint64_t seed = splitmix64(cfg.seed ^ splitmix64((r << 40) ^ (d << 20) ^ trial));
  RandomInstance inst = random_recurrence(model, seed);
  SequenceData full = unroll_instance(inst, full_n);

  MinTermsQuery q;
  q.order = r;
  q.degree_min = q.degree_max = d;
  q.method = Method::kHnfLll;
  q.families = {BasisFamily::standard()};
  ExperimentRow row{r, d, trial, std::nullopt};
  if (auto len = min_terms(full, q)) row.min_n = *len - 1;
  return row;
}

double median(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n % 2 == 1) return static_cast<double>(v[n / 2]);
  return (static_cast<double>(v[n / 2 - 1]) + static_cast<double>(v[n / 2])) / 2;
}

}  // namespace

ExperimentReport generic_experiment(const ExperimentConfig& cfg) {
  struct Cell {
    std::size_t r, d, trial;
  };
  std::vector<Cell> cells;
  for (auto r : cfg.orders)
    for (auto d : cfg.degrees)
      for (std::size_t t = 0; t < cfg.trials; ++t) cells.push_back({r, d, t});

  ExperimentReport report;
  report.rows.resize(cells.size());
  const std::size_t workers = std::max(1u, cfg.threads);
  for (std::size_t start = 0; start < cells.size(); start += workers) {
    std::vector<std::future<ExperimentRow>> batch;
    for (std::size_t i = start; i < std::min(cells.size(), start + workers); ++i) {
      const Cell c = cells[i];
      batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                 [&cfg, c] { return run_trial(cfg, c.r, c.d, c.trial); }));
    }
    for (std::size_t i = 0; i < batch.size(); ++i) report.rows[start + i] = batch[i].get();
  }

  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> observed;
  for (const auto& row : report.rows) {
    if (row.min_n) observed[{row.order, row.degree}].push_back(*row.min_n);
  }
  for (auto& [key, values] : observed) report.medians[key] = median(values);
  return report;
}

std::string experiment_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "r,d,trial,minN\n";
  for (const auto& row : report.rows) {
    out << row.order << ',' << row.degree << ',' << row.trial << ',';
    if (row.min_n) out << *row.min_n;
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// brute force

double BruteForceSpec::candidate_count() const {
  const double per_coeff = static_cast<double>(2 * coeff_bound + 1);
  const double per_init = static_cast<double>(init_bound + 1);
  return std::pow(per_coeff, static_cast<double>((order + 1) * (degree + 1))) *
         std::pow(per_init, static_cast<double>(order));
}

namespace {

using i128 = __int128;

std::optional<i128> to_i128(const Int& x) {
  if (x.fits_slong_p()) return static_cast<i128>(x.get_si());
  if (mpz_sizeinbase(x.get_mpz_t(), 2) > 120) return std::nullopt;
  Int hi = x >> 60;
  Int lo = x - (hi << 60);
  return static_cast<i128>(hi.get_si()) * (static_cast<i128>(1) << 60) + static_cast<i128>(lo.get_si());
}

Int from_i128(i128 x) {
  const bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  Int hi(static_cast<unsigned long>(u >> 64));
  Int lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  Int r = (hi << 64) + lo;
  return neg ? Int(-r) : r;
}

struct Partial {
  std::uint64_t recurrences = 0;
  std::uint64_t integral = 0;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> per_index;
  std::vector<BruteForceMatch> matches;
};

class BruteForceWorker {
 public:
  explicit BruteForceWorker(const BruteForceSpec& spec)
      : spec_(spec),
        r_(spec.order),
        d_(spec.degree),
        h_(spec.horizon),
        n_coeffs_((spec.order + 1) * (spec.degree + 1)) {
    if (spec.reference) {
      for (const auto& x : *spec.reference) ref_.push_back(to_i128(x));
    }
    target_ = to_i128(spec.target_value);
    part_.per_index.assign(h_ + 1, 0);
    poly_.assign(r_ + 1, std::vector<i128>(h_ + 1));
  }

  void run(std::uint64_t first, std::uint64_t last) {
    const long b = spec_.coeff_bound;
    std::vector<long> c(n_coeffs_);
    for (std::uint64_t idx = first; idx < last; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t t = n_coeffs_; t-- > 0;) {
        c[t] = static_cast<long>(rest % static_cast<std::uint64_t>(2 * b + 1)) - b;
        rest /= static_cast<std::uint64_t>(2 * b + 1);
      }
      if (!admissible(c)) continue;
      ++part_.recurrences;
      run_initial_values(c);
    }
  }

  Partial take() { return std::move(part_); }

 private:
  // c is laid out shift-major: c[i*(d+1)+j] = c_{i,j}
  long coeff(const std::vector<long>& c, std::size_t i, std::size_t j) const { return c[i * (d_ + 1) + j]; }

  bool admissible(const std::vector<long>& c) const {
    auto row_zero = [&](std::size_t i) {
      for (std::size_t j = 0; j <= d_; ++j)
        if (coeff(c, i, j) != 0) return false;
      return true;
    };
    if (row_zero(r_) || row_zero(0)) return false;
    long g = 0;
    for (long x : c) g = std::gcd(g, std::labs(x));
    if (g != 1) return false;
    std::size_t top = d_ + 1;
    while (coeff(c, r_, top - 1) == 0) --top;
    if (coeff(c, r_, top - 1) < 0) return false;
    // integer roots n >= 0 of p_r divide its constant term
    const long c0 = coeff(c, r_, 0);
    if (c0 == 0) return false;
    for (long n = 1; n <= std::labs(c0); ++n) {
      i128 v = 0;
      for (std::size_t j = d_ + 1; j-- > 0;) v = v * n + coeff(c, r_, j);
      if (v == 0) return false;
    }
    return true;
  }

  void run_initial_values(const std::vector<long>& c) {
    for (std::size_t i = 0; i <= r_; ++i)
      for (std::size_t n = 0; n + r_ <= h_; ++n) {
        i128 v = 0;
        for (std::size_t j = d_ + 1; j-- > 0;) v = v * static_cast<i128>(n) + coeff(c, i, j);
        poly_[i][n] = v;
      }
    const long bi = spec_.init_bound;
    std::vector<long> init(r_, 0);
    std::vector<i128> a(h_ + 1);
    for (;;) {
      for (std::size_t i = 0; i < r_; ++i) a[i] = init[i];
      int status = unroll_small(a);
      if (status == 1) record(c, a);
      else if (status == 2) unroll_big(c, init);
      std::size_t i = r_;
      bool advanced = false;
      while (i-- > 0) {
        if (init[i] < bi) {
          ++init[i];
          advanced = true;
          break;
        }
        init[i] = 0;
      }
      if (!advanced) break;
    }
  }

  // 1: integral through the horizon, 0: not integral, 2: overflow
  int unroll_small(std::vector<i128>& a) const {
    for (std::size_t n = 0; n + r_ <= h_; ++n) {
      i128 num = 0;
      for (std::size_t i = 0; i < r_; ++i) {
        i128 prod;
        if (__builtin_mul_overflow(poly_[i][n], a[n + i], &prod)) return 2;
        if (__builtin_add_overflow(num, prod, &num)) return 2;
      }
      const i128 den = poly_[r_][n];
      if (num % den != 0) return 0;
      a[n + r_] = -(num / den);
    }
    return 1;
  }

  void unroll_big(const std::vector<long>& c, const std::vector<long>& init) {
    std::vector<IntVector> grid(r_ + 1, IntVector(d_ + 1));
    for (std::size_t i = 0; i <= r_; ++i)
      for (std::size_t j = 0; j <= d_; ++j) grid[i][j] = coeff(c, i, j);
    Recurrence rec(std::move(grid));
    RatVector start(init.begin(), init.end());
    RatVector more = unroll(rec, start, h_ + 1 - r_);
    IntVector full(init.begin(), init.end());
    for (const auto& x : more) {
      if (!is_integer(x)) return;
      full.push_back(x.get_num());
    }
    ++part_.integral;
    for (std::size_t n = 0; n <= h_; ++n) {
      if (spec_.reference && n < spec_.reference->size() && full[n] == (*spec_.reference)[n])
        ++part_.per_index[n];
    }
    if (spec_.target_index <= h_ && full[spec_.target_index] == spec_.target_value) {
      ++part_.count;
      keep_match(std::move(rec), IntVector(init.begin(), init.end()));
    }
  }

  void record(const std::vector<long>& c, const std::vector<i128>& a) {
    ++part_.integral;
    for (std::size_t n = 0; n <= h_ && n < ref_.size(); ++n) {
      if (ref_[n] && *ref_[n] == a[n]) ++part_.per_index[n];
    }
    if (spec_.target_index <= h_ && target_ && a[spec_.target_index] == *target_) {
      ++part_.count;
      if (part_.matches.size() <= spec_.keep) {
        std::vector<IntVector> grid(r_ + 1, IntVector(d_ + 1));
        for (std::size_t i = 0; i <= r_; ++i)
          for (std::size_t j = 0; j <= d_; ++j) grid[i][j] = coeff(c, i, j);
        IntVector init;
        for (std::size_t i = 0; i < r_; ++i) init.push_back(from_i128(a[i]));
        keep_match(Recurrence(std::move(grid)), std::move(init));
      }
    }
  }

  void keep_match(Recurrence rec, IntVector init) {
    if (part_.matches.size() <= spec_.keep) part_.matches.push_back({std::move(rec), std::move(init)});
  }

  const BruteForceSpec& spec_;
  std::size_t r_, d_, h_, n_coeffs_;
  std::vector<std::optional<i128>> ref_;
  std::optional<i128> target_;
  std::vector<std::vector<i128>> poly_;
  Partial part_;
};

}  // namespace

BruteForceResult brute_force_single_term(const BruteForceSpec& spec) {
  if (spec.coeff_bound < 1 || spec.init_bound < 0)
    throw std::invalid_argument("brute_force_single_term: bounds must be positive");
  if (spec.horizon < spec.target_index || spec.horizon < spec.order)
    throw std::invalid_argument("brute_force_single_term: horizon below target index or order");
  if (spec.candidate_count() > spec.budget) {
    throw BudgetExceeded("brute_force_single_term: " + std::to_string(spec.candidate_count()) +
                         " candidates exceed the budget of " + std::to_string(spec.budget));
  }
  const std::size_t n_coeffs = (spec.order + 1) * (spec.degree + 1);
  std::uint64_t total = 1;
  for (std::size_t t = 0; t < n_coeffs; ++t) total *= static_cast<std::uint64_t>(2 * spec.coeff_bound + 1);

  const unsigned workers = std::max(1u, spec.threads);
  std::vector<std::future<Partial>> parts;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t first = total * w / workers;
    const std::uint64_t last = total * (w + 1) / workers;
    parts.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                               [&spec, first, last] {
                                 BruteForceWorker worker(spec);
                                 worker.run(first, last);
                                 return worker.take();
                               }));
  }
  BruteForceResult res;
  res.per_index.assign(spec.horizon + 1, 0);
  for (auto& f : parts) {
    Partial p = f.get();
    res.recurrences += p.recurrences;
    res.integral += p.integral;
    res.count += p.count;
    for (std::size_t n = 0; n < p.per_index.size(); ++n) res.per_index[n] += p.per_index[n];
    for (auto& m : p.matches) res.matches.push_back(std::move(m));
  }
  if (res.count > spec.keep) res.matches.clear();
  if (!spec.reference) res.per_index.clear();
  return res;
}

}  // namespace zguess
