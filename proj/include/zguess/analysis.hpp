#pragma once

// Size bounds for integer kernel vectors, the generic-case estimates, random
// recurrence experiments and the single-term brute-force explorer.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zguess/exact_linalg.hpp"
#include "zguess/recurrence.hpp"

namespace zguess {

/// Random recurrences of order r and degree d whose coefficients and initial
/// values are uniform in {-2^ell+1, ..., 2^ell}; the guess matrix has
/// k = N-r+1 rows and m = (r+1)(d+1) columns.
struct GenericModel {
  std::size_t order = 1;
  std::size_t degree = 0;
  unsigned ell = 16;
  std::size_t rows = 1;  // k

  std::size_t cols() const { return (order + 1) * (degree + 1); }
  std::size_t last_index() const { return rows + order - 1; }  // N
  void validate() const;
};

struct BvBound {
  double log2_value = 0;  // log2 of ((1/g) sqrt(det M M^T))^(1/(m-n))
  Int g = 1;
  bool g_exact = false;  // false when the minor enumeration was skipped (g = 1)

  double value() const;
  /// Largest integer sup-norm guaranteed by the bound (rounded outward).
  Int max_sup_norm() const;
};

/// Bombieri-Vaaler bound for an n x m matrix with n < m and full row rank.
/// With g unset the gcd of the maximal minors is enumerated when feasible and
/// replaced by 1 otherwise. Throws std::invalid_argument when n >= m or the
/// rank is deficient.
BvBound bv_bound(const IntMatrix& m, std::optional<Int> g = std::nullopt);

/// log2 of sqrt(det(M M^T))^(1/(m-k)).
double bv_exact_log2(const IntMatrix& m);

/// Exponent of c_{r-1,d} in the estimate: k(k+1)/2 in the closed form,
/// k(k-1)/2 when taken directly from prod_{i<k} u_{i+r}.
enum class CdExponent { kKPlusOne, kKMinusOne };

/// log2 of the generic-case approximation of the bound,
///   ((a c0)^k cd^(k(k+1)/2) ((1/k) prod_{i=1}^k i!)^d)^(1/((r+1)(d+1)-k)),
/// with a = |a_{r-1}|, c0 = |c_{r-1,0}|, cd = |c_{r-1,d}|.
/// Throws std::domain_error when m == k.
double bv_bitsize_estimate(const GenericModel& model, const Int& a_prev, const Int& c0,
                           const Int& cd, CdExponent form = CdExponent::kKPlusOne);

/// Soft bound on N below which the true recurrence is unlikely to be the
/// shortest: (sqrt(8(r+1)(d+1)+49) - 7)/2 + r - 1. Accepts fractional d.
double soft_bound(double r, double d);

struct RandomInstance {
  Recurrence rec;
  IntVector initial;  // a_0..a_{r-1}
};

/// Deterministic under seed. Resamples while p_r vanishes identically or at
/// any n in 0..model.rows-1 (the steps needed to produce a_0..a_N).
RandomInstance random_recurrence(const GenericModel& model, std::uint64_t seed);

/// a_0..a_N of the instance (N = model.last_index()).
SequenceData unroll_instance(const RandomInstance& inst, std::size_t last_index);

/// diag(v_r, ..., v_{r+k-1}) (A . B_d | ... | A . B_0) over the standard
/// basis with v_n = prod_{i=0}^{n-r} (-p_r(i)).
IntMatrix generic_matrix(const RandomInstance& inst, std::size_t rows);

struct ExperimentConfig {
  std::vector<std::size_t> orders{4};
  std::vector<std::size_t> degrees{0, 1, 2, 3, 4, 5, 6};
  unsigned ell = 16;
  std::size_t trials = 5;
  std::uint64_t seed = 1;
  /// Terms beyond the classical threshold (r+1)(d+2) <= N+2 used to confirm
  /// a guess.
  std::size_t extra_terms = 4;
  unsigned threads = 1;
};

struct ExperimentRow {
  std::size_t order = 0;
  std::size_t degree = 0;
  std::size_t trial = 0;
  std::optional<std::size_t> min_n;  // smallest N with a_0..a_N sufficient
};

struct ExperimentReport {
  std::vector<ExperimentRow> rows;
  /// (r, d) -> median of min_n over the trials that succeeded.
  std::map<std::pair<std::size_t, std::size_t>, double> medians;
};

/// For each (r, d): random recurrences at bitsize ell, min_terms with the
/// HNF + LLL guesser over the standard basis.
ExperimentReport generic_experiment(const ExperimentConfig& cfg);

/// CSV with header "r,d,trial,minN" (empty minN for failed trials).
std::string experiment_csv(const ExperimentReport& report);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BruteForceSpec {
  std::size_t order = 2;
  std::size_t degree = 1;
  long coeff_bound = 9;   // |c_{i,j}| <= coeff_bound
  long init_bound = 9;    // 0 <= a_i <= init_bound for i < r
  std::size_t horizon = 20;  // a_r..a_horizon must be integers
  std::size_t target_index = 8;
  Int target_value = 265729;
  /// Optional reference terms (index 0..horizon) for per-index match counts.
  std::optional<IntVector> reference;
  double budget = 1e8;  // maximum number of candidate sequences
  std::size_t keep = 16;  // matches retained when the count is small
  unsigned threads = 1;

  double candidate_count() const;
};

struct BruteForceMatch {
  Recurrence rec;
  IntVector initial;
};

struct BruteForceResult {
  std::uint64_t recurrences = 0;      // recurrences passing the filters
  std::uint64_t integral = 0;         // sequences integral up to the horizon
  std::uint64_t count = 0;            // of those, a_target == target_value
  std::vector<std::uint64_t> per_index;  // per index vs reference (if given)
  std::vector<BruteForceMatch> matches;  // filled when count <= keep
};

/// Enumerates recurrences with |c_{i,j}| <= B, discarding those with a
/// nontrivial coefficient gcd, a leading coefficient vanishing at some n >= 0,
/// a zero leading or trailing polynomial, or a negative normalized sign; runs
/// every initial vector in [0, B']^r and keeps sequences integral through
/// the horizon. Throws BudgetExceeded when candidate_count() > budget.
BruteForceResult brute_force_single_term(const BruteForceSpec& spec);

}  // namespace zguess
