#include "zguess/modular.hpp"

#include <algorithm>

namespace zguess {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

using ModRows = std::vector<std::vector<u64>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref_mod(ModRows& a, std::size_t cols, u64 p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const u64 inv = inv_mod(a[r][c], p);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = mul_mod(a[r][j], inv, p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const u64 f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (a[r][j] == 0) continue;
        a[i][j] = (a[i][j] + p - mul_mod(f, a[r][j], p)) % p;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeSequence::PrimeSequence(std::vector<std::uint64_t> pinned)
    : pinned_(std::move(pinned)), cursor_(kDefaultFirstPrime) {
  for (auto p : pinned_) {
    if (!is_prime(p) || p >= (1ULL << 32)) {
      throw std::invalid_argument("PrimeSequence: " + std::to_string(p) +
                                  " is not a prime below 2^32");
    }
  }
}

std::uint64_t PrimeSequence::next() {
  if (index_ < pinned_.size()) return pinned_[index_++];
  for (;;) {
    u64 c = cursor_;
    cursor_ += 2;
    if (is_prime(c) && std::find(pinned_.begin(), pinned_.end(), c) == pinned_.end()) return c;
  }
}

ModularKernel kernel_mod_p(const IntMatrix& m, std::uint64_t p) {
  if (p < 2 || p >= (1ULL << 32)) throw std::invalid_argument("kernel_mod_p: prime out of range");
  const std::size_t cols = m.cols();
  ModRows a(m.rows(), std::vector<u64>(cols));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = mpz_fdiv_ui(m(i, j).get_mpz_t(), p);
  std::vector<std::size_t> pivots = rref_mod(a, cols, p);

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  ModRows kernel;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u64> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - a[i][f]) % p;
    kernel.push_back(std::move(v));
  }
  ModularKernel k;
  k.modulus = Int(static_cast<unsigned long>(p));
  k.length = cols;
  k.pivot_cols = rref_mod(kernel, cols, p);
  for (const auto& row : kernel) {
    IntVector v(cols);
    for (std::size_t j = 0; j < cols; ++j) v[j] = Int(static_cast<unsigned long>(row[j]));
    k.basis.push_back(std::move(v));
  }
  return k;
}

ModularKernel crt_merge(const ModularKernel& k1, const ModularKernel& k2) {
  if (gcd(k1.modulus, k2.modulus) != 1) throw std::invalid_argument("crt_merge: moduli not coprime");
  if (k1.length != k2.length) throw std::invalid_argument("crt_merge: kernels of different length");
  if (k1.dimension() != k2.dimension()) {
    const Int& suspect = k1.dimension() > k2.dimension() ? k1.modulus : k2.modulus;
    throw UnluckyModulus("crt_merge: kernel dimensions differ; suspect modulus " + suspect.get_str(),
                         suspect);
  }
  if (k1.pivot_cols != k2.pivot_cols) {
    // Bad reduction can only move pivots to the right.
    const Int& suspect = k1.pivot_cols > k2.pivot_cols ? k1.modulus : k2.modulus;
    throw UnluckyModulus("crt_merge: pivot columns differ; suspect modulus " + suspect.get_str(),
                         suspect);
  }
  Int inv;
  mpz_invert(inv.get_mpz_t(), k1.modulus.get_mpz_t(), k2.modulus.get_mpz_t());
  ModularKernel out;
  out.modulus = k1.modulus * k2.modulus;
  out.length = k1.length;
  out.pivot_cols = k1.pivot_cols;
  for (std::size_t i = 0; i < k1.dimension(); ++i) {
    IntVector v(k1.length);
    for (std::size_t j = 0; j < k1.length; ++j) {
      const Int& a = k1.basis[i][j];
      const Int& b = k2.basis[i][j];
      Int t = mod_floor((b - a) * inv, k2.modulus);
      v[j] = a + k1.modulus * t;
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

LatticeBasis lift_lattice(const ModularKernel& k) {
  const std::size_t m = k.length;
  std::vector<IntVector> gens = k.basis;
  for (std::size_t i = 0; i < m; ++i) {
    IntVector e(m);
    e[i] = k.modulus;
    gens.push_back(std::move(e));
  }
  // the lattice has determinant q^(m - dim)
  Int det = power(k.modulus, static_cast<unsigned long>(m - k.dimension()));
  IntMatrix h = hnf_modular(IntMatrix::from_rows(std::span<const IntVector>(gens), m), det);
  return LatticeBasis::trusted(h.row_vectors());
}

bool kernel_holds(const IntMatrix& m, const ModularKernel& k) {
  for (const auto& v : k.basis) {
    for (const auto& x : m * v) {
      if (!mpz_divisible_p(x.get_mpz_t(), k.modulus.get_mpz_t())) return false;
    }
  }
  return true;
}

}  // namespace zguess
