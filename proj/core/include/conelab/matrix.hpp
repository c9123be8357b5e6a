#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "conelab/rational.hpp"

namespace conelab {

struct SparseEntry {
  std::size_t index;
  Rational value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sorted by index, no explicit zeros.
using SparseVector = std::vector<SparseEntry>;

/// Looks up `index` in a sorted sparse vector; zero when absent.
Rational sparse_get(const SparseVector& v, std::size_t index);

/// Returns y + a*x.
SparseVector sparse_axpy(const SparseVector& y, const Rational& a, const SparseVector& x);

/// Exact rational matrix stored as sorted sparse rows.
///
/// Every realization this library builds is very sparse (bases are
/// partial signed permutations), so the row-sparse layout keeps ranks up
/// to 12 (N = 4095) within reach while small dense matrices stay cheap.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Rational& c);
  /// Dense nested rows; all rows must have the same length.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix from_row_major(std::size_t rows, std::size_t cols, std::span<const Rational> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Rational& value);
  const SparseVector& row(std::size_t i) const { return data_[i]; }

  bool is_zero() const;
  std::size_t nonzeros() const;
  bool is_symmetric() const;
  /// c when the matrix equals c*I (square only).
  std::optional<Rational> scalar_value() const;

  Matrix transpose() const;
  Matrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  /// Overwrites the region starting at (row0, col0) with `m`.
  void set_block(std::size_t row0, std::size_t col0, const Matrix& m);

  /// Row-major flattening: entry (i, j) lands at i * cols + j.
  SparseVector flatten() const;
  std::vector<std::vector<Rational>> dense() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& c);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  /// a * transpose(b) without materialising the transpose.
  friend Matrix multiply_transposed(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> data_;
};

/// Matrix-vector product with a dense vector.
std::vector<Rational> apply(const Matrix& m, std::span<const Rational> v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational squared_norm(std::span<const Rational> v);

}  // namespace conelab
