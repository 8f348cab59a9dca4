#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "figlab/errors.hpp"
#include "figlab/field.hpp"

namespace figlab {

template <class K>
using Vec = std::vector<typename K::value_type>;

/// Dense row-major matrix over K. A rows x cols matrix is the linear map
/// K^cols -> K^rows acting on column vectors; this convention holds everywhere.
template <class K>
class Matrix {
 public:
  using value_type = typename K::value_type;

  Matrix() = default;
  Matrix(const K& k, std::size_t rows, std::size_t cols)
      : field_(k), rows_(rows), cols_(cols), data_(rows * cols, k.zero()) {}

  static Matrix identity(const K& k, std::size_t n) {
    Matrix m(k, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
    return m;
  }

  static Matrix from_rows(const K& k, std::size_t cols, const std::vector<Vec<K>>& rows) {
    Matrix m(k, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("from_rows: ragged row " + std::to_string(i));
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const K& k, std::size_t rows, const std::vector<Vec<K>>& columns) {
    Matrix m(k, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) {
        throw DimensionMismatch("from_columns: column " + std::to_string(j) + " has wrong length");
      }
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  /// Sparse constructor; repeated positions accumulate.
  static Matrix from_triplets(const K& k, std::size_t rows, std::size_t cols,
                              const std::vector<std::tuple<std::size_t, std::size_t, value_type>>& t) {
    Matrix m(k, rows, cols);
    for (const auto& [i, j, v] : t) {
      if (i >= rows || j >= cols) throw DimensionMismatch("from_triplets: index out of range");
      m(i, j) = k.add(m(i, j), v);
    }
    return m;
  }

  const K& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  value_type* row(std::size_t i) { return data_.data() + i * cols_; }
  const value_type* row(std::size_t i) const { return data_.data() + i * cols_; }

  Vec<K> row_vec(std::size_t i) const { return Vec<K>(row(i), row(i) + cols_); }
  Vec<K> column(std::size_t j) const {
    Vec<K> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!field_.is_zero(x)) return false;
    }
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        const auto& x = (*this)(i, j);
        if (i == j ? !field_.is_one(x) : !field_.is_zero(x)) return false;
      }
    }
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  K field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

template <class K>
Matrix<K> multiply(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("multiply: left " + a.shape() + " vs right " + b.shape());
  }
  const K& k = a.field();
  Matrix<K> c(k, a.rows(), b.cols());
  const std::size_t n = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto* ci = c.row(i);
    const auto* ai = a.row(i);
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (k.is_zero(ai[l])) continue;
      const auto* bl = b.row(l);
      const auto x = ai[l];
      if (k.is_one(x)) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!k.is_zero(bl[j])) ci[j] = k.add(ci[j], bl[j]);
        }
      } else {
        for (std::size_t j = 0; j < n; ++j) {
          if (!k.is_zero(bl[j])) ci[j] = k.add(ci[j], k.mul(x, bl[j]));
        }
      }
    }
  }
  return c;
}

template <class K>
Vec<K> mul_vec(const Matrix<K>& a, const Vec<K>& v) {
  if (a.cols() != v.size()) {
    throw DimensionMismatch("apply: matrix " + a.shape() + " vs vector of length " +
                            std::to_string(v.size()));
  }
  const K& k = a.field();
  Vec<K> out(a.rows(), k.zero());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (k.is_zero(v[j])) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const auto& x = a(i, j);
      if (!k.is_zero(x)) out[i] = k.add(out[i], k.mul(x, v[j]));
    }
  }
  return out;
}

template <class K>
Matrix<K> transpose(const Matrix<K>& a) {
  Matrix<K> t(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

template <class K>
Matrix<K> add(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("add: " + a.shape() + " vs " + b.shape());
  }
  Matrix<K> c = a;
  const K& k = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = k.add(a(i, j), b(i, j));
  }
  return c;
}

template <class K>
Matrix<K> sub(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("sub: " + a.shape() + " vs " + b.shape());
  }
  Matrix<K> c = a;
  const K& k = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = k.sub(a(i, j), b(i, j));
  }
  return c;
}

template <class K>
Matrix<K> scale(const Matrix<K>& a, const typename K::value_type& s) {
  Matrix<K> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().mul(s, a(i, j));
  }
  return c;
}

/// [a; b]
template <class K>
Matrix<K> vstack(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: " + a.shape() + " vs " + b.shape());
  Matrix<K> c(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  }
  return c;
}

/// [a b]
template <class K>
Matrix<K> hstack(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack: " + a.shape() + " vs " + b.shape());
  Matrix<K> c(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

template <class K>
Matrix<K> block_diag(const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> c(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return c;
}

/// Copy of a into a larger zero matrix at offset (r0, c0).
template <class K>
void paste(Matrix<K>& dst, const Matrix<K>& a, std::size_t r0, std::size_t c0) {
  if (r0 + a.rows() > dst.rows() || c0 + a.cols() > dst.cols()) {
    throw DimensionMismatch("paste: block " + a.shape() + " does not fit in " + dst.shape());
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) dst(r0 + i, c0 + j) = a(i, j);
  }
}

template <class K>
Matrix<K> submatrix(const Matrix<K>& a, std::size_t r0, std::size_t c0, std::size_t rows,
                    std::size_t cols) {
  if (r0 + rows > a.rows() || c0 + cols > a.cols()) throw DimensionMismatch("submatrix out of range");
  Matrix<K> c(a.field(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) c(i, j) = a(r0 + i, c0 + j);
  }
  return c;
}

template <class K>
Vec<K> add(const K& k, const Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector add: length mismatch");
  Vec<K> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = k.add(a[i], b[i]);
  return c;
}

template <class K>
bool is_zero_vec(const K& k, const Vec<K>& v) {
  for (const auto& x : v) {
    if (!k.is_zero(x)) return false;
  }
  return true;
}

template <class K>
Vec<K> unit_vec(const K& k, std::size_t n, std::size_t i) {
  Vec<K> v(n, k.zero());
  v[i] = k.one();
  return v;
}

}  // namespace figlab
