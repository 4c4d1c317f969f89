#pragma once

// Guess matrices and the guessing algorithms: the classical nullspace
// guesser, HNF + LLL (single degree), the multimodular variant and the
// degree sweep that recycles reduced bases.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zguess/exact_linalg.hpp"
#include "zguess/lattice.hpp"
#include "zguess/poly_basis.hpp"
#include "zguess/recurrence.hpp"

namespace zguess {

struct GuessProblem {
  SequenceData data;
  std::size_t order = 0;
  std::size_t degree = 0;      // single-degree algorithms
  std::size_t degree_min = 0;  // degree sweep
  std::size_t degree_max = 0;
  BasisFamily family = BasisFamily::standard();
  std::size_t plausibility_terms = 10;
  ReductionParams params;
  std::vector<std::uint64_t> primes;  // pinned primes for the modular guesser

  /// Throws std::invalid_argument when N < r or degree_min > degree_max.
  void validate() const;
};

/// k x (r+1)(d+1) integer matrix, k = N-r+1. Column (d-j)(r+1)+i of row n
/// holds b_j(n) a_{n+i}; rows of rational data are scaled by the lcm of their
/// denominators.
struct GuessMatrix {
  IntMatrix m;
  std::size_t order = 0;
  std::size_t degree = 0;

  std::size_t rows() const { return m.rows(); }
  std::size_t cols() const { return m.cols(); }
};

GuessMatrix build_matrix(const GuessProblem& p, std::size_t degree);

struct GuessResult {
  std::optional<Recurrence> recurrence;
  std::size_t kernel_dim = 0;
  /// (N-r+1) - (r+1)(d+1); positive when the system is overdetermined.
  long overdetermination = 0;
  /// Degree at which a degree sweep stopped (equals p.degree otherwise).
  std::size_t degree = 0;
  /// Moduli combined by the modular guesser (product of the primes used).
  Int modulus = 0;

  explicit operator bool() const { return recurrence.has_value(); }
};

/// Rational nullspace; succeeds only for a one-dimensional nullspace whose
/// recurrence fits all data.
GuessResult guess_classical(const GuessProblem& p);

/// Integer kernel via HNF, then the first vector of its LLL reduction.
GuessResult guess_alg1(const GuessProblem& p);

/// Kernels modulo a growing product of primes until the first LLL vector of
/// the lifted lattice is an exact kernel vector.
GuessResult guess_alg2(const GuessProblem& p);

using Plausibility = std::function<bool(const Recurrence&)>;

/// Per-degree record of the degree sweep.
struct SweepStep {
  std::size_t degree = 0;
  std::vector<IntVector> kernel;     // HNF basis of ker_Z at this degree
  std::vector<IntVector> lll_input;  // padded previous basis + new HNF rows
  std::vector<IntVector> reduced;    // the basis L after reduction
  bool plausible = false;
};

/// Degree sweep from degree_min to degree_max reusing the reduced basis of
/// the previous degree. Defaults to integrality of the next
/// plausibility_terms terms as the plausibility test.
GuessResult guess_alg3(const GuessProblem& p, const Plausibility& plausible = {},
                       std::vector<SweepStep>* trace = nullptr);

enum class Method { kClassical, kHnfLll, kModular, kIncremental };

std::string_view method_name(Method m);
std::optional<Method> parse_method_name(std::string_view name);

struct MinTermsQuery {
  std::size_t order = 0;
  std::size_t degree_min = 0;
  std::size_t degree_max = 0;  // single degree: degree_min == degree_max
  Method method = Method::kHnfLll;
  std::vector<BasisFamily> families;  // empty: the four default families
  std::size_t plausibility_terms = 10;
  ReductionParams params;
  std::vector<std::uint64_t> primes;
};

/// Runs `method` on the problem as configured; single-degree methods use
/// p.degree.
GuessResult run_method(Method method, const GuessProblem& p);

/// Smallest prefix length of full_data from which the method (with at least
/// one family) guesses a recurrence that fits all of full_data.
std::optional<std::size_t> min_terms(const SequenceData& full_data, const MinTermsQuery& q);

}  // namespace zguess
