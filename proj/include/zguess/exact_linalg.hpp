#pragma once

// Exact integer and rational matrices: Hermite normal form, integer kernels,
// Gram determinants, minor gcds and lattice comparisons.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "zguess/numeric.hpp"

namespace zguess {

/// Dense row-major matrix over Z or Q.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init);

  static Matrix from_rows(std::span<const std::vector<T>> rows, std::size_t cols);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<std::vector<T>> row_vectors() const;

  Matrix transposed() const;

  /// (this | other), same row count.
  Matrix hconcat(const Matrix& other) const;

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& m, const IntVector& v);

/// Row-style Hermite normal form with zero rows dropped: staircase shape,
/// positive pivots, entries above a pivot in [0, pivot). The rows generate
/// the same Z-lattice as the rows of m.
IntMatrix hnf(const IntMatrix& m);

/// Hermite normal form of a lattice known to contain modulus * Z^cols.
/// `modulus` must be a positive multiple of the lattice determinant; every
/// intermediate entry stays below it.
IntMatrix hnf_modular(const IntMatrix& m, const Int& modulus);

/// Z-module basis of { x in Z^cols : m x = 0 }, taken from the rows (0, r)
/// of hnf((m^T | I)). The basis is itself in Hermite normal form.
std::vector<IntVector> integer_kernel(const IntMatrix& m);
std::vector<IntVector> integer_kernel(const RatMatrix& m);

/// Multiplies each row by the lcm of its denominators.
IntMatrix clear_denominators(const RatMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// det(m m^T); zero iff the rows are dependent.
Int gram_det(const IntMatrix& m);

/// Basis of the rational nullspace of m from its reduced row echelon form:
/// one vector per free column, with a 1 in that column.
std::vector<RatVector> rational_nullspace(const IntMatrix& m);

class MinorLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMinorLimit = 100000;

/// gcd of all rows() x rows() minors of m (rows < cols). Zero iff rank < rows.
/// Throws MinorLimitExceeded when C(cols, rows) > limit.
Int minor_gcd(const IntMatrix& m, std::size_t limit = kDefaultMinorLimit);

/// True iff both vector families generate the same Z-lattice.
/// Throws std::invalid_argument when the vector lengths differ.
bool lattice_equal(const std::vector<IntVector>& a, const std::vector<IntVector>& b);

/// Integer coordinates x with v = sum_i x_i h_i for the rows h_i of a matrix
/// in Hermite normal form; nullopt when v is not in their lattice.
std::optional<IntVector> lattice_coordinates(const IntMatrix& hnf_rows, const IntVector& v);

bool lattice_contains(const std::vector<IntVector>& generators, const IntVector& v);

// ---------------------------------------------------------------------------

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> init)
    : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
    for (long x : r) data_.emplace_back(x);
  }
}

template <typename T>
Matrix<T> Matrix<T>::from_rows(std::span<const std::vector<T>> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("Matrix::from_rows: length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <typename T>
std::vector<std::vector<T>> Matrix<T>::row_vectors() const {
  std::vector<std::vector<T>> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <typename T>
Matrix<T> Matrix<T>::hconcat(const Matrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("hconcat: row count mismatch");
  Matrix out(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
  }
  return out;
}

}  // namespace zguess
