#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library beyond its value types.

#include <cstdint>
#include <random>
#include <vector>

#include "zguess/exact_linalg.hpp"
#include "zguess/numeric.hpp"
#include "zguess/recurrence.hpp"

namespace oracle {

using zguess::Int;
using zguess::IntMatrix;
using zguess::IntVector;
using zguess::Rat;
using zguess::RatVector;

// Pascal's triangle, row n.
inline IntVector pascal_row(unsigned n) {
  IntVector row{Int(1)};
  for (unsigned i = 0; i < n; ++i) {
    IntVector next(row.size() + 1, Int(0));
    for (std::size_t k = 0; k < row.size(); ++k) {
      next[k] += row[k];
      next[k + 1] += row[k];
    }
    row = std::move(next);
  }
  return row;
}

inline Int choose(unsigned n, unsigned k) { return k > n ? Int(0) : pascal_row(n)[k]; }

inline Int catalan(unsigned n) { return choose(2 * n, n) / (n + 1); }

/// sum_{k <= n} C_{step k}, n = 0..count-1.
inline IntVector catalan_sums(std::size_t count, unsigned step = 1) {
  IntVector out;
  Int s = 0;
  for (std::size_t n = 0; n < count; ++n) {
    s += catalan(step * static_cast<unsigned>(n));
    out.push_back(s);
  }
  return out;
}

inline IntVector central_delannoy(std::size_t count) {
  IntVector out;
  for (unsigned n = 0; n < count; ++n) {
    Int s = 0;
    for (unsigned k = 0; k <= n; ++k) s += choose(n, k) * choose(n + k, k);
    out.push_back(s);
  }
  return out;
}

/// Number of palindromes whose square is a palindrome with n digits, from
/// the quasi-polynomial closed form (valid for n > 1; a(1) = 4).
inline Int a307717(long n) {
  if (n == 1) return 4;
  if (n % 2 == 0) return 0;
  const Int x(n);
  if (n % 4 == 1) return (195 + 203 * x - 15 * x * x + x * x * x) / 192;
  return (501 + 107 * x - 9 * x * x + x * x * x) / 384;
}

// Laplace expansion along the first row.
inline Rat det_laplace(const std::vector<RatVector>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Rat total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<RatVector> minor;
    for (std::size_t i = 1; i < n; ++i) {
      RatVector row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[i][j]);
      minor.push_back(std::move(row));
    }
    Rat term = a[0][c] * det_laplace(minor);
    total += (c % 2 == 0) ? term : Rat(-term);
  }
  return total;
}

inline Int gram_det_naive(const IntMatrix& m) {
  std::vector<RatVector> g(m.rows(), RatVector(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) {
      Int s = 0;
      for (std::size_t k = 0; k < m.cols(); ++k) s += m(i, k) * m(j, k);
      g[i][j] = s;
    }
  return det_laplace(g).get_num();
}

// Gaussian elimination over Q.
inline std::size_t rank_naive(const IntMatrix& m) {
  std::vector<RatVector> a;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    RatVector row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    a.push_back(std::move(row));
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline bool annihilates(const IntMatrix& m, const IntVector& v) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    if (s != 0) return false;
  }
  return true;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(-bound, bound);
  return m;
}

/// Product of random elementary row operations (determinant +-1).
inline IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    if (n > 1 && i == j) j = (i + 1) % n;
    const int op = static_cast<int>(rng.uniform(0, 2));
    if (op == 0 && i != j) {
      const long f = rng.uniform(-3, 3);
      for (std::size_t c = 0; c < n; ++c) u(i, c) += f * u(j, c);
    } else if (op == 1 && i != j) {
      for (std::size_t c = 0; c < n; ++c) std::swap(u(i, c), u(j, c));
    } else {
      for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
    }
  }
  return u;
}

/// Random independent basis of `count` vectors in Z^len.
inline std::vector<IntVector> random_basis(Rng& rng, std::size_t count, std::size_t len, long bound) {
  for (;;) {
    IntMatrix m = random_matrix(rng, count, len, bound);
    if (rank_naive(m) == count) return m.row_vectors();
  }
}

struct NaiveBruteForce {
  std::uint64_t recurrences = 0;
  std::uint64_t integral = 0;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> per_index;
};

/// Straight nested enumeration with rational unrolling. Filters: zero p_r or
/// p_0, coefficient gcd > 1, negative leading coefficient of p_r, or p_r with
/// a root in 0..B+1 (any integer root is bounded by 1 + B).
inline NaiveBruteForce naive_brute_force(std::size_t r, std::size_t d, long b, long b_init,
                                         std::size_t horizon, std::size_t target_index,
                                         const Int& target, const IntVector& reference) {
  NaiveBruteForce out;
  out.per_index.assign(horizon + 1, 0);
  const std::size_t nc = (r + 1) * (d + 1);
  std::vector<long> c(nc, -b);
  auto p = [&](std::size_t i, long n) {
    Int v = 0;
    Int pw = 1;
    for (std::size_t j = 0; j <= d; ++j) {
      v += c[i * (d + 1) + j] * pw;
      pw *= n;
    }
    return v;
  };
  for (;;) {
    bool ok = true;
    bool pr_zero = true, p0_zero = true;
    for (std::size_t j = 0; j <= d; ++j) {
      if (c[r * (d + 1) + j] != 0) pr_zero = false;
      if (c[j] != 0) p0_zero = false;
    }
    ok = !pr_zero && !p0_zero;
    if (ok) {
      Int g = 0;
      for (long x : c) g = zguess::gcd(g, Int(x));
      ok = g == 1;
    }
    if (ok) {
      long lead = 0;
      for (std::size_t j = 0; j <= d; ++j)
        if (c[r * (d + 1) + j] != 0) lead = c[r * (d + 1) + j];
      ok = lead > 0;
    }
    for (long n = 0; ok && n <= b + 1; ++n) ok = p(r, n) != 0;
    if (ok) {
      ++out.recurrences;
      std::vector<long> init(r, 0);
      for (;;) {
        std::vector<Rat> a(init.begin(), init.end());
        bool integral = true;
        for (std::size_t n = 0; n + r <= horizon; ++n) {
          Rat s = 0;
          for (std::size_t i = 0; i < r; ++i) s += Rat(p(i, static_cast<long>(n))) * a[n + i];
          Rat next = -s / Rat(p(r, static_cast<long>(n)));
          if (next.get_den() != 1) {
            integral = false;
            break;
          }
          a.push_back(next);
        }
        if (integral) {
          ++out.integral;
          for (std::size_t n = 0; n <= horizon && n < reference.size(); ++n)
            if (a[n] == Rat(reference[n])) ++out.per_index[n];
          if (a[target_index] == Rat(target)) ++out.count;
        }
        std::size_t i = r;
        bool more = false;
        while (i-- > 0) {
          if (init[i] < b_init) {
            ++init[i];
            more = true;
            break;
          }
          init[i] = 0;
        }
        if (!more) break;
      }
    }
    std::size_t k = nc;
    bool more = false;
    while (k-- > 0) {
      if (c[k] < b) {
        ++c[k];
        more = true;
        break;
      }
      c[k] = -b;
    }
    if (!more) break;
  }
  return out;
}

}  // namespace oracle
