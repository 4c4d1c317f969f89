#include "zguess/exact_linalg.hpp"

#include <algorithm>
#include <utility>

namespace zguess {

namespace {

using Rows = std::vector<IntVector>;

// row -= q * pivot, over columns [from, end).
void sub_mul(IntVector& row, const Int& q, const IntVector& pivot, std::size_t from) {
  for (std::size_t j = from; j < row.size(); ++j) {
    if (pivot[j] != 0) mpz_submul(row[j].get_mpz_t(), q.get_mpz_t(), pivot[j].get_mpz_t());
  }
}

void reduce_mod(IntVector& row, const Int& modulus, std::size_t from) {
  for (std::size_t j = from; j < row.size(); ++j) {
    mpz_mod(row[j].get_mpz_t(), row[j].get_mpz_t(), modulus.get_mpz_t());
  }
}

bool zero_from(const IntVector& row, std::size_t from) {
  for (std::size_t j = from; j < row.size(); ++j) {
    if (row[j] != 0) return false;
  }
  return true;
}

// Euclidean elimination of column c over rows [first, rows.size()): on return
// rows[first] holds the gcd in column c (possibly negative) and every other
// row in the range has a zero there. Returns false if the column is zero.
bool eliminate_column(Rows& rows, std::size_t first, std::size_t c, const Int* modulus) {
  Int q;
  for (;;) {
    std::size_t best = rows.size();
    for (std::size_t i = first; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      if (best == rows.size() || mpz_cmpabs(rows[i][c].get_mpz_t(), rows[best][c].get_mpz_t()) < 0) best = i;
    }
    if (best == rows.size()) return false;
    std::swap(rows[first], rows[best]);
    const IntVector& pivot = rows[first];
    bool clean = true;
    for (std::size_t i = first + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      q = round_div(rows[i][c], pivot[c]);
      sub_mul(rows[i], q, pivot, c);
      if (modulus) reduce_mod(rows[i], *modulus, c + 1);
      if (rows[i][c] != 0) clean = false;
    }
    if (clean) return true;
  }
}

void drop_zero_rows(Rows& rows, std::size_t first, std::size_t from) {
  auto it = std::remove_if(rows.begin() + static_cast<std::ptrdiff_t>(first), rows.end(),
                           [from](const IntVector& r) { return zero_from(r, from); });
  rows.erase(it, rows.end());
}

// Rows are in echelon form with positive pivots; make entries above each
// pivot lie in [0, pivot).
void reduce_above_pivots(Rows& rows) {
  Int q;
  for (std::size_t p = 0; p < rows.size(); ++p) {
    const IntVector& pivot = rows[p];
    std::size_t c = 0;
    while (pivot[c] == 0) ++c;
    for (std::size_t i = 0; i < p; ++i) {
      q = floor_div(rows[i][c], pivot[c]);
      if (q != 0) sub_mul(rows[i], q, pivot, c);
    }
  }
}

IntMatrix to_matrix(const Rows& rows, std::size_t cols) {
  return IntMatrix::from_rows(std::span<const IntVector>(rows), cols);
}

// Fraction-free Gaussian elimination in place; returns the rank and, for
// square input, sets det (with sign) when requested.
std::size_t bareiss(Rows& a, std::size_t cols, Int* det) {
  const std::size_t n = a.size();
  Int prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) {
      if (det) {
        *det = 0;
        return r;
      }
      continue;
    }
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (det) *det = (r == n) ? Int(sign * prev) : Int(0);
  return r;
}

}  // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        mpz_addmul(c(i, j).get_mpz_t(), a(i, k).get_mpz_t(), b(k, j).get_mpz_t());
    }
  return c;
}

IntVector operator*(const IntMatrix& m, const IntVector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  IntVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_addmul(out[i].get_mpz_t(), m(i, j).get_mpz_t(), v[j].get_mpz_t());
  return out;
}

IntMatrix hnf(const IntMatrix& m) {
  const std::size_t cols = m.cols();
  if (m.rows() == cols && cols > 0) {
    Int d = abs(determinant(m));
    if (d != 0) return hnf_modular(m, d);
  }
  Rows rows = m.row_vectors();
  drop_zero_rows(rows, 0, 0);
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows.size(); ++c) {
    if (!eliminate_column(rows, pr, c, nullptr)) continue;
    IntVector& pivot = rows[pr];
    if (pivot[c] < 0) {
      for (std::size_t j = c; j < cols; ++j) pivot[j] = -pivot[j];
    }
    Int q;
    for (std::size_t i = 0; i < pr; ++i) {
      q = floor_div(rows[i][c], pivot[c]);
      if (q != 0) sub_mul(rows[i], q, pivot, c);
    }
    ++pr;
    drop_zero_rows(rows, pr, c + 1);
  }
  rows.resize(pr);
  return to_matrix(rows, cols);
}

IntMatrix hnf_modular(const IntMatrix& m, const Int& modulus) {
  if (modulus <= 0) throw std::invalid_argument("hnf_modular: modulus must be positive");
  const std::size_t cols = m.cols();
  Rows work = m.row_vectors();
  for (auto& r : work) reduce_mod(r, modulus, 0);
  drop_zero_rows(work, 0, 0);

  Rows result;
  result.reserve(cols);
  Int big_r = modulus;
  Int h, u, v;
  for (std::size_t c = 0; c < cols; ++c) {
    IntVector pivot(cols);
    if (eliminate_column(work, 0, c, &big_r)) {
      const IntVector& g = work.front();
      mpz_gcdext(h.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), g[c].get_mpz_t(),
                 big_r.get_mpz_t());
      for (std::size_t j = c + 1; j < cols; ++j) pivot[j] = u * g[j];
      reduce_mod(pivot, big_r, c + 1);
      work.erase(work.begin());
    } else {
      h = big_r;
    }
    pivot[c] = h;
    result.push_back(std::move(pivot));
    mpz_divexact(big_r.get_mpz_t(), big_r.get_mpz_t(), h.get_mpz_t());
    for (auto& r : work) reduce_mod(r, big_r, c + 1);
    drop_zero_rows(work, 0, c + 1);
  }
  reduce_above_pivots(result);
  return to_matrix(result, cols);
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  const std::size_t k = m.rows();
  const std::size_t n = m.cols();
  if (n == 0) return {};
  IntMatrix augmented = m.transposed().hconcat(IntMatrix::identity(n));
  IntMatrix h = hnf(augmented);
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool prefix_zero = true;
    for (std::size_t j = 0; j < k && prefix_zero; ++j) prefix_zero = (h(i, j) == 0);
    if (!prefix_zero) continue;
    IntVector r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = h(i, k + j);
    basis.push_back(std::move(r));
  }
  return basis;
}

std::vector<IntVector> integer_kernel(const RatMatrix& m) {
  return integer_kernel(clear_denominators(m));
}

IntMatrix clear_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    }
  }
  return out;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  if (m.rows() == 0) return 1;
  Rows a = m.row_vectors();
  Int det;
  bareiss(a, m.cols(), &det);
  return det;
}

std::size_t rank(const IntMatrix& m) {
  Rows a = m.row_vectors();
  return bareiss(a, m.cols(), nullptr);
}

Int gram_det(const IntMatrix& m) {
  if (m.rows() == 0) return 1;
  return determinant(m * m.transposed());
}

std::vector<RatVector> rational_nullspace(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<RatVector> a(rows, RatVector(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rat inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<RatVector> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Int minor_gcd(const IntMatrix& m, std::size_t limit) {
  const std::size_t n = m.rows();
  const std::size_t cols = m.cols();
  if (n > cols) throw std::invalid_argument("minor_gcd: more rows than columns");
  if (n == 0) return 1;
  Int count = binomial(Int(static_cast<unsigned long>(cols)), n);
  if (count > static_cast<unsigned long>(limit)) {
    throw MinorLimitExceeded("minor_gcd: " + count.get_str() + " minors exceed the limit of " +
                             std::to_string(limit));
  }
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  Int g = 0;
  IntMatrix sub(n, n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sub(i, j) = m(i, pick[j]);
    Int d = determinant(sub);
    g = gcd(g, d);
    // next combination
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == cols - n + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return g;
}

bool lattice_equal(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
  std::size_t len = 0;
  bool seen = false;
  for (const auto* family : {&a, &b}) {
    for (const auto& v : *family) {
      if (!seen) {
        len = v.size();
        seen = true;
      } else if (v.size() != len) {
        throw std::invalid_argument("lattice_equal: vector length mismatch");
      }
    }
  }
  if (!seen) return true;
  IntMatrix ha = hnf(IntMatrix::from_rows(std::span<const IntVector>(a), len));
  IntMatrix hb = hnf(IntMatrix::from_rows(std::span<const IntVector>(b), len));
  return ha == hb;
}

std::optional<IntVector> lattice_coordinates(const IntMatrix& hnf_rows, const IntVector& v) {
  if (v.size() != hnf_rows.cols()) throw std::invalid_argument("lattice_coordinates: length mismatch");
  IntVector rest = v;
  IntVector coords(hnf_rows.rows());
  std::size_t col = 0;
  for (std::size_t i = 0; i < hnf_rows.rows(); ++i) {
    std::size_t p = 0;
    while (p < hnf_rows.cols() && hnf_rows(i, p) == 0) ++p;
    if (p == hnf_rows.cols()) throw std::invalid_argument("lattice_coordinates: zero row");
    for (; col < p; ++col) {
      if (rest[col] != 0) return std::nullopt;
    }
    if (!mpz_divisible_p(rest[p].get_mpz_t(), hnf_rows(i, p).get_mpz_t())) return std::nullopt;
    coords[i] = rest[p] / hnf_rows(i, p);
    if (coords[i] != 0) {
      for (std::size_t j = p; j < rest.size(); ++j)
        mpz_submul(rest[j].get_mpz_t(), coords[i].get_mpz_t(), hnf_rows(i, j).get_mpz_t());
    }
    col = p + 1;
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

bool lattice_contains(const std::vector<IntVector>& generators, const IntVector& v) {
  if (generators.empty()) return is_zero(v);
  IntMatrix h = hnf(IntMatrix::from_rows(std::span<const IntVector>(generators), v.size()));
  if (h.rows() == 0) return is_zero(v);
  return lattice_coordinates(h, v).has_value();
}

}  // namespace zguess
