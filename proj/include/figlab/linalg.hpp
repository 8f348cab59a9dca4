#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "figlab/matrix.hpp"

namespace figlab {

/// Brings m to reduced row-echelon form in place and returns the pivot columns.
/// Zero rows end up at the bottom.
template <class K>
std::vector<std::size_t> rref_in_place(Matrix<K>& m) {
  const K k = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!k.is_zero(m(i, c))) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(sel, j), m(r, j));
    }
    auto* pr = m.row(r);
    if (!k.is_one(pr[c])) {
      const auto inv = k.inv(pr[c]);
      for (std::size_t j = c; j < cols; ++j) pr[j] = k.mul(inv, pr[j]);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto* pi = m.row(i);
      if (k.is_zero(pi[c])) continue;
      const auto f = pi[c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!k.is_zero(pr[j])) pi[j] = k.sub_mul(pi[j], f, pr[j]);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
struct RrefResult {
  Matrix<K> form;
  std::vector<std::size_t> pivots;
};

template <class K>
RrefResult<K> rref(Matrix<K> m) {
  auto piv = rref_in_place(m);
  return {std::move(m), std::move(piv)};
}

template <class K>
std::size_t rank(Matrix<K> m) {
  return rref_in_place(m).size();
}

/// A subspace of K^n stored by its canonical RREF basis (one row per basis vector).
template <class K>
class Subspace {
 public:
  Subspace() = default;
  Subspace(const K& k, std::size_t ambient) : basis_(k, 0, ambient) {}

  /// Span of the given rows (any matrix with ambient columns).
  static Subspace span_rows(Matrix<K> rows) {
    Subspace s;
    s.pivots_ = rref_in_place(rows);
    s.basis_ = submatrix(rows, 0, 0, s.pivots_.size(), rows.cols());
    return s;
  }
  static Subspace span(const K& k, std::size_t ambient, const std::vector<Vec<K>>& vectors) {
    return span_rows(Matrix<K>::from_rows(k, ambient, vectors));
  }
  static Subspace full(const K& k, std::size_t n) { return span_rows(Matrix<K>::identity(k, n)); }

  const K& field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t codim() const { return ambient() - dim(); }
  const Matrix<K>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec<K> vector(std::size_t i) const { return basis_.row_vec(i); }

  /// v minus its component along the basis, read off at pivot columns.
  Vec<K> reduce(Vec<K> v) const {
    check_len(v.size());
    const K& k = field();
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const auto c = v[pivots_[i]];
      if (k.is_zero(c)) continue;
      const auto* b = basis_.row(i);
      for (std::size_t j = pivots_[i]; j < ambient(); ++j) {
        if (!k.is_zero(b[j])) v[j] = k.sub_mul(v[j], c, b[j]);
      }
    }
    return v;
  }

  bool contains(const Vec<K>& v) const { return is_zero_vec(field(), reduce(v)); }

  /// Coordinates of v (assumed to lie in the subspace) in the RREF basis.
  Vec<K> coords(const Vec<K>& v) const {
    check_len(v.size());
    Vec<K> c(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  /// Inclusion K^dim -> K^ambient.
  Matrix<K> inclusion() const { return transpose(basis_); }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  void check_len(std::size_t n) const {
    if (n != ambient()) {
      throw DimensionMismatch("subspace of K^" + std::to_string(ambient()) +
                              " vs vector of length " + std::to_string(n));
    }
  }

  Matrix<K> basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {x : m x = 0}.
template <class K>
Subspace<K> kernel_basis(const Matrix<K>& m) {
  const K& k = m.field();
  auto [r, piv] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vec<K>> vecs;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<K> x(m.cols(), k.zero());
    x[f] = k.one();
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = k.neg(r(i, f));
    vecs.push_back(std::move(x));
  }
  return Subspace<K>::span(k, m.cols(), vecs);
}

/// Column space of m as a subspace of K^rows.
template <class K>
Subspace<K> image_basis(const Matrix<K>& m) {
  return Subspace<K>::span_rows(transpose(m));
}

/// A surjection K^n -> K^(n - dim s) with kernel exactly s: the non-pivot
/// coordinates of the reduction modulo s.
template <class K>
Matrix<K> quotient_map(std::size_t ambient, const Subspace<K>& s) {
  if (s.ambient() != ambient) {
    throw DimensionMismatch("quotient_map: ambient " + std::to_string(ambient) +
                            " vs subspace of K^" + std::to_string(s.ambient()));
  }
  const K& k = s.field();
  std::vector<bool> is_pivot(ambient, false);
  for (auto p : s.pivots()) is_pivot[p] = true;
  Matrix<K> q(k, ambient - s.dim(), ambient);
  std::size_t row = 0;
  for (std::size_t j = 0; j < ambient; ++j) {
    if (is_pivot[j]) continue;
    q(row, j) = k.one();
    for (std::size_t i = 0; i < s.dim(); ++i) {
      const auto& b = s.basis()(i, j);
      if (!k.is_zero(b)) q(row, s.pivots()[i]) = k.neg(b);
    }
    ++row;
  }
  return q;
}

/// A right inverse of quotient_map: unit vectors at the non-pivot columns.
template <class K>
Matrix<K> quotient_section(const Subspace<K>& s) {
  const K& k = s.field();
  std::vector<bool> is_pivot(s.ambient(), false);
  for (auto p : s.pivots()) is_pivot[p] = true;
  Matrix<K> e(k, s.ambient(), s.codim());
  std::size_t col = 0;
  for (std::size_t j = 0; j < s.ambient(); ++j) {
    if (!is_pivot[j]) e(j, col++) = k.one();
  }
  return e;
}

/// Some x with m x = v, if one exists.
template <class K>
std::optional<Vec<K>> solve(const Matrix<K>& m, const Vec<K>& v) {
  if (v.size() != m.rows()) {
    throw DimensionMismatch("solve: matrix " + m.shape() + " vs right-hand side of length " +
                            std::to_string(v.size()));
  }
  const K& k = m.field();
  Matrix<K> aug(k, m.rows(), m.cols() + 1);
  paste(aug, m, 0, 0);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = v[i];
  auto piv = rref_in_place(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  Vec<K> x(m.cols(), k.zero());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, m.cols());
  return x;
}

template <class K>
Subspace<K> subspace_sum(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.ambient() != b.ambient()) {
    throw DimensionMismatch("subspace_sum: K^" + std::to_string(a.ambient()) + " vs K^" +
                            std::to_string(b.ambient()));
  }
  return Subspace<K>::span_rows(vstack(a.basis(), b.basis()));
}

template <class K>
Subspace<K> intersection(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.ambient() != b.ambient()) throw DimensionMismatch("intersection: ambient mismatch");
  // x in a and b  <=>  x = A^T y = B^T z
  const K& k = a.field();
  Matrix<K> sys = hstack(a.inclusion(), scale(b.inclusion(), k.neg(k.one())));
  auto ker = kernel_basis(sys);
  std::vector<Vec<K>> vecs;
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    auto v = ker.vector(i);
    Vec<K> y(v.begin(), v.begin() + a.dim());
    vecs.push_back(mul_vec(a.inclusion(), y));
  }
  return Subspace<K>::span(k, a.ambient(), vecs);
}

/// Image of a subspace under a linear map.
template <class K>
Subspace<K> map_subspace(const Matrix<K>& m, const Subspace<K>& s) {
  return Subspace<K>::span_rows(transpose(multiply(m, s.inclusion())));
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const K& k = m.field();
  const std::size_t n = m.rows();
  Matrix<K> aug = hstack(m, Matrix<K>::identity(k, n));
  auto piv = rref_in_place(aug);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  return submatrix(aug, 0, n, n, n);
}

/// RREF basis grown one vector at a time; used for orbit saturation.
template <class K>
class IncrementalBasis {
 public:
  IncrementalBasis(const K& k, std::size_t ambient) : k_(k), ambient_(ambient) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }

  Vec<K> reduce(Vec<K> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto c = v[pivots_[i]];
      if (k_.is_zero(c)) continue;
      const auto& b = rows_[i];
      for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
        if (!k_.is_zero(b[j])) v[j] = k_.sub_mul(v[j], c, b[j]);
      }
    }
    return v;
  }

  bool contains(const Vec<K>& v) const { return is_zero_vec(k_, reduce(v)); }

  /// Adds v; returns false when v was already in the span.
  bool add(const Vec<K>& v) {
    if (v.size() != ambient_) throw DimensionMismatch("IncrementalBasis::add: wrong length");
    Vec<K> r = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && k_.is_zero(r[p])) ++p;
    if (p == ambient_) return false;
    const auto inv = k_.inv(r[p]);
    for (std::size_t j = p; j < ambient_; ++j) r[j] = k_.mul(inv, r[j]);
    for (auto& b : rows_) {
      const auto c = b[p];
      if (k_.is_zero(c)) continue;
      for (std::size_t j = p; j < ambient_; ++j) {
        if (!k_.is_zero(r[j])) b[j] = k_.sub_mul(b[j], c, r[j]);
      }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
  }

  Subspace<K> subspace() const {
    return Subspace<K>::span_rows(Matrix<K>::from_rows(k_, ambient_, rows_));
  }

 private:
  K k_;
  std::size_t ambient_;
  std::vector<Vec<K>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace figlab
