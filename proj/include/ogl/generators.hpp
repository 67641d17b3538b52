// Copyright 2026 The ogl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGL_GENERATORS_HPP
#define OGL_GENERATORS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ogl/random.hpp"
#include "ogl/subspace.hpp"

namespace ogl {

// Instance factories for the verification campaigns.
//
// Entries are Gaussian integers a+bi with |a|,|b| <= height (default 4).
// Configurations with a prescribed intersection are built structurally:
// the common part first, then the extensions; compatible ones come from a
// random unitary, non-compatible ones from small random integer vectors,
// and every output is re-checked with the exact predicates before return.

inline constexpr int kDefaultHeight = 4;
inline constexpr int kMaxAttempts = 1000;

using SubspacePair = std::pair<Subspace, Subspace>;

inline Scalar random_gaussian_integer(Rng& rng, int height) {
  return {mpq_class(rng.uniform(-height, height)), mpq_class(rng.uniform(-height, height))};
}

inline Vector random_vector(std::size_t n, Rng& rng, int height = kDefaultHeight) {
  Vector v(n);
  do {
    for (auto& x : v) x = random_gaussian_integer(rng, height);
  } while (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); }));
  return v;
}

inline Subspace random_subspace(std::size_t n, std::size_t k, Rng& rng, int height = kDefaultHeight) {
  detail::require(k > 0 && k <= n, "random_subspace: need 0 < k <= n");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(random_vector(n, rng, height));
    Subspace s = Subspace::span(rows, n);
    if (s.dim() == k) return s;
  }
  throw SearchExhausted("random_subspace: no full-rank sample");
}

inline Subspace random_subspace(std::size_t n, std::size_t k, int height, std::uint64_t seed) {
  Rng rng(seed);
  return random_subspace(n, k, rng, height);
}

/// Random nonzero combination of the basis rows of V.
inline Vector random_vector_in(const Subspace& v, Rng& rng, int height = 2) {
  detail::require(v.dim() > 0, "random_vector_in: zero subspace");
  for (;;) {
    Vector out(v.ambient());
    bool nonzero = false;
    for (std::size_t r = 0; r < v.dim(); ++r) {
      Scalar c = random_gaussian_integer(rng, height);
      if (c.is_zero()) continue;
      nonzero = true;
      for (std::size_t j = 0; j < v.ambient(); ++j) out[j] += c * v.basis()(r, j);
    }
    if (nonzero) return out;
  }
}

inline Subspace random_line_in(const Subspace& v, Rng& rng) { return line(random_vector_in(v, rng)); }

/// Random d-dimensional subspace of V.
inline Subspace random_subspace_in(const Subspace& v, std::size_t d, Rng& rng) {
  detail::require(d <= v.dim(), "random_subspace_in: d exceeds dim V");
  if (d == 0) return Subspace::zero(v.ambient());
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < d; ++i) rows.push_back(random_vector_in(v, rng));
    Subspace s = Subspace::span(rows, v.ambient());
    if (s.dim() == d) return s;
  }
  throw SearchExhausted("random_subspace_in: no full-rank sample");
}

/// Product of a few Householder reflections I - 2 v v^*/(v^* v) with short
/// Gaussian-integer vectors. Exactly unitary over Q(i).
inline ExactMatrix random_unitary(std::size_t n, Rng& rng, std::size_t reflections = 0) {
  ExactMatrix u = ExactMatrix::identity(n);
  if (n < 2) return u;
  if (reflections == 0) reflections = std::max<std::size_t>(3, n / 2 + 1);
  for (std::size_t r = 0; r < reflections; ++r) {
    Vector v(n);
    const std::size_t support = 2 + rng.below(std::min<std::size_t>(n, 3) - 1);
    for (std::size_t s = 0; s < support; ++s) v[rng.below(n)] = random_gaussian_integer(rng, 2);
    const Scalar vv = inner(v, v);
    if (vv.is_zero()) continue;
    ExactMatrix h = ExactMatrix::identity(n);
    const Scalar f = Scalar(2) / vv;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!v[i].is_zero() && !v[j].is_zero()) h(i, j) -= f * v[i] * v[j].conj();
    u = matmul(h, u);
  }
  return u;
}

/// Rows of a random unitary: an orthonormal basis of C^n, in shuffled order.
inline std::vector<Vector> random_orthogonal_basis(std::size_t n, Rng& rng) {
  std::vector<Vector> rows = random_unitary(n, rng).row_vectors();
  for (std::size_t i = n; i > 1; --i) std::swap(rows[i - 1], rows[rng.below(i)]);
  return rows;
}

/// Random pairwise-orthogonal basis of V (Gram-Schmidt on random vectors of V).
inline std::vector<Vector> random_orthogonal_basis_in(const Subspace& v, Rng& rng) {
  std::vector<Vector> out;
  while (out.size() < v.dim()) {
    Vector x = random_vector_in(v, rng);
    for (const auto& b : out) {
      const Scalar c = inner(x, b) / inner(b, b);
      for (std::size_t j = 0; j < x.size(); ++j) x[j] -= c * b[j];
    }
    if (std::any_of(x.begin(), x.end(), [](const Scalar& s) { return !s.is_zero(); })) out.push_back(std::move(x));
  }
  return out;
}

/// Replaces basis[idx[0..c)] (pairwise orthogonal, c >= 2) by an orthogonal
/// basis of their span in which no vector is parallel to an old one:
/// v_1 = sum b_i, v_j = sum_{i<j} b_i - (sum_{i<j} |b_i|^2 / |b_j|^2) b_j.
inline std::vector<Vector> mix_orthogonal_block(std::vector<Vector> basis, const std::vector<std::size_t>& idx) {
  detail::require(idx.size() >= 2, "mix_orthogonal_block: need at least two vectors");
  const std::size_t n = basis.at(idx[0]).size();
  std::vector<Vector> old;
  for (auto i : idx) old.push_back(basis.at(i));
  Vector prefix(n);
  Scalar prefix_norm = 0;
  for (std::size_t j = 0; j < old.size(); ++j) {
    const Scalar nj = inner(old[j], old[j]);
    Vector v(n);
    if (j == 0) {
      for (const auto& b : old)
        for (std::size_t t = 0; t < n; ++t) v[t] += b[t];
    } else {
      const Scalar c = prefix_norm / nj;
      for (std::size_t t = 0; t < n; ++t) v[t] = prefix[t] - c * old[j][t];
    }
    for (std::size_t t = 0; t < n; ++t) prefix[t] += old[j][t];
    prefix_norm += nj;
    basis[idx[j]] = std::move(v);
  }
  return basis;
}

inline Subspace span_of(const std::vector<Vector>& basis, const std::vector<std::size_t>& idx,
                        std::size_t n) {
  if (idx.empty()) return Subspace::zero(n);
  std::vector<Vector> rows;
  for (auto i : idx) rows.push_back(basis.at(i));
  return Subspace::span(rows, n);
}

/// (X, Y) of dimension k in C^n with dim(X∩Y) = m and the requested
/// compatibility.
inline SubspacePair pair_with_intersection(std::size_t n, std::size_t k, std::size_t m,
                                           bool compatible, Rng& rng, int height = kDefaultHeight) {
  detail::require(k > 0 && k < n, "pair_with_intersection: need 0 < k < n");
  detail::require(m <= k && 2 * k - m <= n, "pair_with_intersection: need m <= k and 2k-m <= n");
  detail::require(compatible || m < k, "pair_with_intersection: X = Y is always compatible");

  if (compatible) {
    const auto basis = random_orthogonal_basis(n, rng);
    std::vector<std::size_t> xi, yi;
    for (std::size_t i = 0; i < k; ++i) xi.push_back(i);
    for (std::size_t i = 0; i < m; ++i) yi.push_back(i);
    for (std::size_t i = k; i < 2 * k - m; ++i) yi.push_back(i);
    Subspace x = span_of(basis, xi, n);
    Subspace y = span_of(basis, yi, n);
    detail::ensure(intersection_dim(x, y) == m && is_compatible(x, y),
                   "pair_with_intersection: compatible construction failed");
    return {std::move(x), std::move(y)};
  }

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Vector> common, xs, ys;
    for (std::size_t i = 0; i < m; ++i) common.push_back(random_vector(n, rng, height));
    for (std::size_t i = m; i < k; ++i) xs.push_back(random_vector(n, rng, height));
    for (std::size_t i = m; i < k; ++i) ys.push_back(random_vector(n, rng, height));
    xs.insert(xs.end(), common.begin(), common.end());
    ys.insert(ys.end(), common.begin(), common.end());
    Subspace x = Subspace::span(xs, n);
    Subspace y = Subspace::span(ys, n);
    if (x.dim() != k || y.dim() != k) continue;
    if (intersection_dim(x, y) != m) continue;
    if (is_compatible(x, y)) continue;
    return {std::move(x), std::move(y)};
  }
  throw SearchExhausted("pair_with_intersection: rejection sampling gave up");
}

inline SubspacePair pair_with_intersection(std::size_t n, std::size_t k, std::size_t m,
                                           bool compatible, std::uint64_t seed) {
  Rng rng(seed);
  return pair_with_intersection(n, k, m, compatible, rng);
}

inline SubspacePair adjacent_noncompatible_pair(std::size_t n, std::size_t k, Rng& rng) {
  detail::require(k >= 1, "adjacent_noncompatible_pair: need k >= 1");
  return pair_with_intersection(n, k, k - 1, false, rng);
}

inline SubspacePair compatible_codim2_pair(std::size_t n, std::size_t k, Rng& rng) {
  detail::require(k >= 2 && k + 2 <= n, "compatible_codim2_pair: need k >= 2 and k+2 <= n");
  return pair_with_intersection(n, k, k - 2, true, rng);
}

struct SubspaceTriple {
  Subspace x, y, z;
};

/// Non-compatible X, Y with dim(X∩Y) = k-2 that still have a common
/// ortho-neighbour Z. With W ⊂ Z of dim k-2 and two distinct lines P, P' in
/// Z ⊖ W, X = W + (P^⊥ in Z ⊖ W) + r and Y = W + (P'^⊥ in Z ⊖ W) + r' for
/// independent r, r' ⊥ Z.
inline SubspaceTriple noncompatible_codim2_with_neighbor(std::size_t n, std::size_t k, Rng& rng) {
  detail::require(k >= 2 && k + 2 <= n, "noncompatible_codim2_with_neighbor: need k >= 2 and k+2 <= n");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const auto basis = random_orthogonal_basis(n, rng);
    std::vector<std::size_t> wi, zi, ri;
    for (std::size_t i = 0; i < k - 2; ++i) wi.push_back(i);
    for (std::size_t i = 0; i < k; ++i) zi.push_back(i);
    for (std::size_t i = k; i < n; ++i) ri.push_back(i);
    const Subspace w = span_of(basis, wi, n);
    const Subspace z = span_of(basis, zi, n);
    const Subspace plane = span_of(basis, {k - 2, k - 1}, n);
    const Subspace outside = span_of(basis, ri, n);
    const Subspace p1 = random_line_in(plane, rng), p2 = random_line_in(plane, rng);
    const Subspace q1 = intersect(plane, orthocomplement(p1));
    const Subspace q2 = intersect(plane, orthocomplement(p2));
    const Subspace r1 = random_line_in(outside, rng), r2 = random_line_in(outside, rng);
    Subspace x = sum(sum(w, q1), r1);
    Subspace y = sum(sum(w, q2), r2);
    if (intersection_dim(x, y) + 2 != k || is_compatible(x, y)) continue;
    if (!is_ortho_adjacent(x, z) || !is_ortho_adjacent(y, z)) continue;
    return {std::move(x), std::move(y), z};
  }
  throw SearchExhausted("noncompatible_codim2_with_neighbor: rejection sampling gave up");
}

}  // namespace ogl

#endif  // OGL_GENERATORS_HPP
