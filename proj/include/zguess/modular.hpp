#pragma once

// Kernels modulo word-size primes, Chinese remaindering of row-reduced kernel
// bases and the integer lattices they define.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zguess/exact_linalg.hpp"
#include "zguess/lattice.hpp"

namespace zguess {

/// Row-reduced basis of ker(M) over Z/qZ: pivot entries 1, zeros elsewhere in
/// pivot columns, vectors ordered by pivot column, entries in [0, q).
struct ModularKernel {
  Int modulus;
  std::size_t length = 0;  // number of columns of M
  std::vector<IntVector> basis;
  std::vector<std::size_t> pivot_cols;

  std::size_t dimension() const { return basis.size(); }
};

/// Thrown by crt_merge when the pivot profiles disagree; `suspect` is the
/// modulus whose kernel looks too large.
class UnluckyModulus : public std::runtime_error {
 public:
  UnluckyModulus(const std::string& what, Int suspect)
      : std::runtime_error(what), suspect_(std::move(suspect)) {}
  const Int& suspect() const { return suspect_; }

 private:
  Int suspect_;
};

bool is_prime(std::uint64_t n);

/// First odd prime used when no primes are pinned: the least prime above 2^31.
inline constexpr std::uint64_t kDefaultFirstPrime = 2147483659ULL;

/// Deterministic ascending prime sequence: the pinned primes first, then
/// primes from kDefaultFirstPrime upward (skipping any already pinned).
class PrimeSequence {
 public:
  explicit PrimeSequence(std::vector<std::uint64_t> pinned = {});
  std::uint64_t next();

 private:
  std::vector<std::uint64_t> pinned_;
  std::size_t index_ = 0;
  std::uint64_t cursor_;
};

/// Row-reduced kernel of m over Z/pZ with leftmost pivots. p must be a prime
/// below 2^32.
ModularKernel kernel_mod_p(const IntMatrix& m, std::uint64_t p);

/// Entrywise CRT lift of two kernels with coprime moduli to modulus q1*q2.
/// Throws std::invalid_argument for non-coprime moduli or different lengths,
/// UnluckyModulus for different pivot profiles.
ModularKernel crt_merge(const ModularKernel& k1, const ModularKernel& k2);

/// Basis (exactly `length` vectors, in Hermite normal form) of
/// { w in Z^length : M w = 0 mod q }, generated by the lifted kernel vectors
/// and q e_1, ..., q e_length.
LatticeBasis lift_lattice(const ModularKernel& k);

/// M v mod q == 0 for every basis vector.
bool kernel_holds(const IntMatrix& m, const ModularKernel& k);

}  // namespace zguess
