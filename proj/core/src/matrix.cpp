#include "conelab/matrix.hpp"

#include <algorithm>

#include "conelab/errors.hpp"

namespace conelab {
namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw StructuralError(std::string("shape mismatch in ") + what);
  }
}

template <class Vector>
auto find_entry(Vector& v, std::size_t index) {
  return std::lower_bound(v.begin(), v.end(), index,
                          [](const SparseEntry& e, std::size_t i) { return e.index < i; });
}

}  // namespace

Rational sparse_get(const SparseVector& v, std::size_t index) {
  auto it = find_entry(v, index);
  if (it != v.end() && it->index == index) return it->value;
  return 0;
}

SparseVector sparse_axpy(const SparseVector& y, const Rational& a, const SparseVector& x) {
  if (a == 0 || x.empty()) return y;
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->index < ix->index)) {
      out.push_back(*iy++);
    } else if (iy == y.end() || ix->index < iy->index) {
      out.push_back({ix->index, a * ix->value});
      ++ix;
    } else {
      Rational sum = iy->value + a * ix->value;
      if (sum != 0) out.push_back({iy->index, std::move(sum)});
      ++iy;
      ++ix;
    }
  }
  return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::identity(std::size_t n) { return scalar(n, 1); }

Matrix Matrix::scalar(std::size_t n, const Rational& c) {
  Matrix m(n, n);
  if (c != 0) {
    for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, c});
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw StructuralError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j] != 0) m.data_[i].push_back({j, rows[i][j]});
    }
  }
  return m;
}

Matrix Matrix::from_row_major(std::size_t rows, std::size_t cols, std::span<const Rational> values) {
  if (values.size() != rows * cols) {
    throw StructuralError("expected " + std::to_string(rows * cols) + " entries, got " +
                          std::to_string(values.size()));
  }
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& v = values[i * cols + j];
      if (v != 0) m.data_[i].push_back({j, v});
    }
  }
  return m;
}

Rational Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw StructuralError("matrix index out of range");
  return sparse_get(data_[i], j);
}

void Matrix::set(std::size_t i, std::size_t j, const Rational& value) {
  if (i >= rows_ || j >= cols_) throw StructuralError("matrix index out of range");
  auto& row = data_[i];
  auto it = find_entry(row, j);
  const bool present = it != row.end() && it->index == j;
  if (value == 0) {
    if (present) row.erase(it);
  } else if (present) {
    it->value = value;
  } else {
    row.insert(it, {j, value});
  }
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseVector& r) { return r.empty(); });
}

std::size_t Matrix::nonzeros() const {
  std::size_t count = 0;
  for (const auto& r : data_) count += r.size();
  return count;
}

bool Matrix::is_symmetric() const { return is_square() && *this == transpose(); }

std::optional<Rational> Matrix::scalar_value() const {
  if (!is_square()) return std::nullopt;
  if (rows_ == 0) return Rational(0);
  Rational c = 0;
  if (!data_[0].empty()) {
    if (data_[0].size() != 1 || data_[0][0].index != 0) return std::nullopt;
    c = data_[0][0].value;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    const auto& r = data_[i];
    if (c == 0) {
      if (!r.empty()) return std::nullopt;
    } else if (r.size() != 1 || r[0].index != i || r[0].value != c) {
      return std::nullopt;
    }
  }
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) t.data_[e.index].push_back({i, e.value});
  }
  return t;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw StructuralError("block out of range");
  Matrix b(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& r = data_[row0 + i];
    for (auto it = find_entry(r, col0); it != r.end() && it->index < col0 + cols; ++it) {
      b.data_[i].push_back({it->index - col0, it->value});
    }
  }
  return b;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& m) {
  if (row0 + m.rows_ > rows_ || col0 + m.cols_ > cols_) throw StructuralError("block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i) {
    auto& r = data_[row0 + i];
    auto first = find_entry(r, col0);
    auto last = find_entry(r, col0 + m.cols_);
    SparseVector replacement;
    replacement.reserve(m.data_[i].size());
    for (const auto& e : m.data_[i]) replacement.push_back({e.index + col0, e.value});
    auto pos = r.erase(first, last);
    r.insert(pos, replacement.begin(), replacement.end());
  }
}

SparseVector Matrix::flatten() const {
  SparseVector v;
  v.reserve(nonzeros());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) v.push_back({i * cols_ + e.index, e.value});
  }
  return v;
}

std::vector<std::vector<Rational>> Matrix::dense() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) out[i][e.index] = e.value;
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "addition");
  for (std::size_t i = 0; i < rows_; ++i) data_[i] = sparse_axpy(data_[i], 1, other.data_[i]);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "subtraction");
  for (std::size_t i = 0; i < rows_; ++i) data_[i] = sparse_axpy(data_[i], -1, other.data_[i]);
  return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
  if (c == 0) {
    for (auto& r : data_) r.clear();
    return *this;
  }
  for (auto& r : data_) {
    for (auto& e : r) e.value *= c;
  }
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw StructuralError("shape mismatch in multiplication");
  Matrix out(a.rows_, b.cols_);
  std::vector<Rational> accumulator(b.cols_);
  std::vector<char> touched(b.cols_, 0);
  std::vector<std::size_t> touched_list;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    touched_list.clear();
    for (const auto& ea : a.data_[i]) {
      for (const auto& eb : b.data_[ea.index]) {
        if (!touched[eb.index]) {
          touched[eb.index] = 1;
          touched_list.push_back(eb.index);
          accumulator[eb.index] = 0;
        }
        accumulator[eb.index] += ea.value * eb.value;
      }
    }
    std::sort(touched_list.begin(), touched_list.end());
    auto& row = out.data_[i];
    for (std::size_t c : touched_list) {
      touched[c] = 0;
      if (accumulator[c] != 0) row.push_back({c, accumulator[c]});
    }
  }
  return out;
}

Matrix multiply_transposed(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw StructuralError("shape mismatch in a * transpose(b)");
  Matrix out(a.rows_, b.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    const auto& ra = a.data_[i];
    if (ra.empty()) continue;
    for (std::size_t j = 0; j < b.rows_; ++j) {
      const auto& rb = b.data_[j];
      Rational sum = 0;
      auto ia = ra.begin();
      auto ib = rb.begin();
      while (ia != ra.end() && ib != rb.end()) {
        if (ia->index < ib->index) {
          ++ia;
        } else if (ib->index < ia->index) {
          ++ib;
        } else {
          sum += ia->value * ib->value;
          ++ia;
          ++ib;
        }
      }
      if (sum != 0) out.data_[i].push_back({j, std::move(sum)});
    }
  }
  return out;
}

std::vector<Rational> apply(const Matrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw StructuralError("shape mismatch in matrix-vector product");
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& e : m.row(i)) out[i] += e.value * v[e.index];
  }
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw StructuralError("length mismatch in dot product");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Rational squared_norm(std::span<const Rational> v) { return dot(v, v); }

}  // namespace conelab
