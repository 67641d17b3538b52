// Copyright 2026 The ogl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGL_MATRIX_HPP
#define OGL_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ogl/errors.hpp"
#include "ogl/gaussian_rational.hpp"

namespace ogl {

using Scalar = GaussianRational;
using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q(i).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw ShapeError("entry count does not match shape");
  }
  ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Stacks the given vectors as rows; every vector must have length `cols`.
  static ExactMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }
  std::vector<Vector> row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
    return out;
  }
  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  const std::vector<Scalar>& entries() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

inline ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("row length does not match column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

inline ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matmul: inner dimensions differ");
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Scalar& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& y = b(l, j);
        if (y.is_zero()) continue;
        out(i, j) += x * y;
      }
    }
  }
  return out;
}

inline Vector matvec(const ExactMatrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw ShapeError("matvec: dimension mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!v[j].is_zero() && !a(i, j).is_zero()) out[i] += a(i, j) * v[j];
  return out;
}

inline ExactMatrix transpose(const ExactMatrix& a) {
  ExactMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

/// Entrywise complex conjugate (no transpose).
inline ExactMatrix conjugate(const ExactMatrix& a) {
  ExactMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).conj();
  return out;
}

inline ExactMatrix adjoint(const ExactMatrix& a) {
  ExactMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j).conj();
  return out;
}

inline ExactMatrix add(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("add: shape mismatch");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

inline ExactMatrix sub(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("sub: shape mismatch");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

inline ExactMatrix scale(const Scalar& s, const ExactMatrix& a) {
  ExactMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

inline ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.cols()) throw ShapeError("vstack: column counts differ");
  std::vector<Scalar> data = a.entries();
  data.insert(data.end(), b.entries().begin(), b.entries().end());
  return {a.rows() + b.rows(), a.cols(), std::move(data)};
}

inline ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack: row counts differ");
  ExactMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

inline bool is_self_adjoint(const ExactMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (a(i, j) != a(j, i).conj()) return false;
  return true;
}

/// <x, y> = sum_j x_j * conj(y_j); conjugate-linear in the second slot.
inline Scalar inner(std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != y.size()) throw ShapeError("inner: length mismatch");
  Scalar s;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!x[j].is_zero() && !y[j].is_zero()) s += x[j] * y[j].conj();
  return s;
}

struct RrefResult {
  ExactMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form over Q(i). The result is unique, so it doubles
/// as a canonical form for row spaces.
inline RrefResult rref(ExactMatrix a) {
  RrefResult out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != lead)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(lead, j));
    const Scalar inv = Scalar(1) / a(lead, c);
    for (std::size_t j = c; j < a.cols(); ++j)
      if (!a(lead, j).is_zero()) a(lead, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      const Scalar f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(lead, j).is_zero()) a(r, j) -= f * a(lead, j);
    }
    out.pivot_cols.push_back(c);
    ++lead;
  }
  out.rank = lead;
  out.reduced = std::move(a);
  return out;
}

inline std::size_t rank(const ExactMatrix& a) { return rref(a).rank; }

/// Rows of the result form a basis of {x : a * x^T = 0}, one row per free
/// column of rref(a), with a 1 in that free column.
inline ExactMatrix kernel_basis(const ExactMatrix& a) {
  const RrefResult r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  ExactMatrix k(a.cols() - r.rank, a.cols());
  std::size_t row = 0;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    k(row, f) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) k(row, r.pivot_cols[i]) = -r.reduced(i, f);
    ++row;
  }
  return k;
}

/// Inverse of a square matrix via Gauss-Jordan on [A | I].
inline ExactMatrix inverse(const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("inverse: matrix is not square");
  const std::size_t n = a.rows();
  RrefResult r = rref(hstack(a, ExactMatrix::identity(n)));
  if (r.rank < n || (n > 0 && r.pivot_cols[n - 1] != n - 1))
    throw PreconditionError("inverse: matrix is singular");
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r.reduced(i, n + j);
  return out;
}

inline std::string to_string(const ExactMatrix& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) s += ", ";
      s += a(i, j).to_string();
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace ogl

#endif  // OGL_MATRIX_HPP
