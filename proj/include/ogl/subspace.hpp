// Copyright 2026 The ogl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGL_SUBSPACE_HPP
#define OGL_SUBSPACE_HPP

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ogl/errors.hpp"
#include "ogl/matrix.hpp"

namespace ogl {

/// A subspace of C^n stored as the nonzero rows of its reduced row echelon
/// basis. Two Subspace values are equal as sets iff they compare equal.
///
/// The orthogonal projection onto the subspace is computed on first use and
/// shared between copies.
class Subspace {
 public:
  /// Zero subspace of C^0; mostly useful as a placeholder.
  Subspace() : cache_(std::make_shared<Cache>()) {}

  /// Linear span of `vectors` in C^ambient. Throws if every vector is zero.
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient) {
    Subspace s = from_rows(ExactMatrix::from_rows(vectors, ambient));
    if (s.dim() == 0) throw PreconditionError("span: all input vectors are zero");
    return s;
  }

  /// Row space of `rows`; the zero matrix gives the zero subspace.
  static Subspace from_rows(const ExactMatrix& rows) {
    RrefResult r = rref(rows);
    Subspace s;
    s.n_ = rows.cols();
    s.basis_ = ExactMatrix(r.rank, rows.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
      for (std::size_t j = 0; j < rows.cols(); ++j) s.basis_(i, j) = r.reduced(i, j);
    s.pivots_ = std::move(r.pivot_cols);
    return s;
  }

  static Subspace zero(std::size_t n) { return from_rows(ExactMatrix(0, n)); }
  static Subspace full(std::size_t n) { return from_rows(ExactMatrix::identity(n)); }

  /// span{e_i : i in indices}, 0-based.
  static Subspace coordinate(std::size_t n, const std::vector<std::size_t>& indices) {
    ExactMatrix m(indices.size(), n);
    for (std::size_t r = 0; r < indices.size(); ++r) {
      if (indices[r] >= n) throw PreconditionError("coordinate: index out of range");
      m(r, indices[r]) = 1;
    }
    return from_rows(m);
  }

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.rows(); }
  const ExactMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

  bool contains(std::span<const Scalar> v) const {
    if (v.size() != n_) throw ShapeError("contains: vector length differs from ambient dimension");
    // In RREF, v lies in the row space iff v = sum_i v[pivot_i] * row_i.
    Vector rest(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
      const Scalar c = rest[pivots_[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!basis_(i, j).is_zero()) rest[j] -= c * basis_(i, j);
    }
    for (const auto& x : rest)
      if (!x.is_zero()) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    if (other.n_ != n_) throw ShapeError("contains: ambient dimensions differ");
    if (other.dim() > dim()) return false;
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  /// Orthogonal projection P with image this subspace. With A = B^T (basis
  /// vectors as columns), P = A (A^* A)^{-1} A^*.
  const ExactMatrix& projection() const {
    std::call_once(cache_->once, [this] {
      if (dim() == 0) {
        cache_->projection = ExactMatrix(n_, n_);
        return;
      }
      const ExactMatrix a = transpose(basis_);
      const ExactMatrix astar = conjugate(basis_);
      const ExactMatrix gram_inv = inverse(matmul(astar, a));
      cache_->projection = matmul(a, matmul(gram_inv, astar));
    });
    return cache_->projection;
  }

  /// Text key; equal subspaces have equal keys.
  std::string key() const { return std::to_string(n_) + ":" + ogl::to_string(basis_); }

  std::string to_string() const {
    std::string s = "span{";
    for (std::size_t i = 0; i < dim(); ++i) {
      if (i) s += ", ";
      s += "(";
      for (std::size_t j = 0; j < n_; ++j) {
        if (j) s += ",";
        s += basis_(i, j).to_string();
      }
      s += ")";
    }
    return s + "} in C^" + std::to_string(n_);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  struct Cache {
    std::once_flag once;
    ExactMatrix projection;
  };

  std::size_t n_ = 0;
  ExactMatrix basis_;
  std::vector<std::size_t> pivots_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

inline Subspace line(const Vector& v) { return Subspace::span({v}, v.size()); }

inline ExactMatrix projection_matrix(const Subspace& x) { return x.projection(); }

namespace detail {

inline void same_ambient(const Subspace& x, const Subspace& y, const char* op) {
  if (x.ambient() != y.ambient())
    throw ShapeError(std::string(op) + ": ambient dimensions differ");
}

inline void same_dim(const Subspace& x, const Subspace& y, const char* op) {
  same_ambient(x, y, op);
  if (x.dim() != y.dim()) throw ShapeError(std::string(op) + ": subspace dimensions differ");
}

}  // namespace detail

inline Subspace sum(const Subspace& x, const Subspace& y) {
  detail::same_ambient(x, y, "sum");
  return Subspace::from_rows(vstack(x.basis(), y.basis()));
}

/// dim(X + Y), cheaper than building the sum.
inline std::size_t sum_dim(const Subspace& x, const Subspace& y) {
  detail::same_ambient(x, y, "sum_dim");
  return rank(vstack(x.basis(), y.basis()));
}

inline std::size_t intersection_dim(const Subspace& x, const Subspace& y) {
  return x.dim() + y.dim() - sum_dim(x, y);
}

/// X ∩ Y from the left kernel of the stacked bases: a*B_X + b*B_Y = 0
/// gives the common vector a*B_X.
inline Subspace intersect(const Subspace& x, const Subspace& y) {
  detail::same_ambient(x, y, "intersect");
  if (x.dim() == 0 || y.dim() == 0) return Subspace::zero(x.ambient());
  const ExactMatrix coeffs = kernel_basis(transpose(vstack(x.basis(), y.basis())));
  ExactMatrix a(coeffs.rows(), x.dim());
  for (std::size_t r = 0; r < coeffs.rows(); ++r)
    for (std::size_t c = 0; c < x.dim(); ++c) a(r, c) = coeffs(r, c);
  return Subspace::from_rows(matmul(a, x.basis()));
}

/// X^⊥ = {v : <v, b> = 0 for all b in X} = ker(conj(B_X)).
inline Subspace orthocomplement(const Subspace& x) {
  if (x.dim() == 0) return Subspace::full(x.ambient());
  return Subspace::from_rows(kernel_basis(conjugate(x.basis())));
}

/// V ∩ X^⊥, the orthogonal complement of X inside V. Requires X ⊆ V.
inline Subspace ortho_within(const Subspace& x, const Subspace& v) {
  detail::same_ambient(x, v, "ortho_within");
  if (!v.contains(x)) throw PreconditionError("ortho_within: X is not contained in V");
  return intersect(v, orthocomplement(x));
}

inline bool is_orthogonal(const Subspace& x, const Subspace& y) {
  detail::same_ambient(x, y, "is_orthogonal");
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < y.dim(); ++j)
      if (!inner(x.basis().row(i), y.basis().row(j)).is_zero()) return false;
  return true;
}

/// dim(X∩Y) = k-1, cross-checked against rank(P_X - P_Y) = 2.
inline bool is_adjacent(const Subspace& x, const Subspace& y) {
  detail::same_dim(x, y, "is_adjacent");
  const std::size_t k = x.dim();
  const bool by_dim = k > 0 && intersection_dim(x, y) + 1 == k;
  const bool by_rank = rank(sub(x.projection(), y.projection())) == 2;
  detail::ensure(by_dim == by_rank, "is_adjacent: intersection and projection-rank tests disagree");
  return by_dim;
}

/// P_X P_Y = P_Y P_X, cross-checked against X = (X∩Y) + (X∩Y^⊥).
inline bool is_compatible(const Subspace& x, const Subspace& y) {
  detail::same_ambient(x, y, "is_compatible");
  // P_Y P_X = (P_X P_Y)^*, so commuting means P_X P_Y is self-adjoint.
  const bool commute = is_self_adjoint(matmul(x.projection(), y.projection()));
  const bool split =
      intersection_dim(x, y) + intersection_dim(x, orthocomplement(y)) == x.dim();
  detail::ensure(commute == split, "is_compatible: commutator and decomposition tests disagree");
  return commute;
}

inline bool is_ortho_adjacent(const Subspace& x, const Subspace& y) {
  detail::same_dim(x, y, "is_ortho_adjacent");
  // Adjacency is the cheap filter; only adjacent pairs pay for the commutator.
  if (intersection_dim(x, y) + 1 != x.dim()) return false;
  return is_adjacent(x, y) && is_compatible(x, y);
}

/// Multiplicities of principal angles 0 and π/2, and of everything in between.
struct AngleSignature {
  std::size_t zeros = 0;
  std::size_t right = 0;
  std::size_t middle = 0;

  friend bool operator==(const AngleSignature&, const AngleSignature&) = default;
};

inline AngleSignature angle_signature(const Subspace& x, const Subspace& y) {
  detail::same_dim(x, y, "angle_signature");
  AngleSignature s;
  s.zeros = intersection_dim(x, y);
  s.right = intersection_dim(x, orthocomplement(y));
  s.middle = x.dim() - s.zeros - s.right;
  return s;
}

/// Mutually orthogonal spanning vectors of X (Gram-Schmidt without
/// normalisation, so everything stays in Q(i)).
inline std::vector<Vector> orthogonal_basis(const Subspace& x) {
  std::vector<Vector> out;
  std::vector<mpq_class> norms;
  for (std::size_t r = 0; r < x.dim(); ++r) {
    Vector v = x.basis().row_vector(r);
    for (std::size_t q = 0; q < out.size(); ++q) {
      const Scalar c = inner(v, out[q]) / Scalar(norms[q]);
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * out[q][j];
    }
    Scalar nn = inner(v, v);
    norms.push_back(nn.re());
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace ogl

#endif  // OGL_SUBSPACE_HPP
