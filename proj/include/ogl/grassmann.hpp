// Copyright 2026 The ogl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGL_GRASSMANN_HPP
#define OGL_GRASSMANN_HPP

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ogl/generators.hpp"
#include "ogl/subspace.hpp"

namespace ogl {

/// Which edge relation a path or universe uses: adjacency (Grassmann graph)
/// or ortho-adjacency (ortho-Grassmann graph).
enum class GraphKind { Grassmann, Ortho };

inline const char* to_string(GraphKind k) { return k == GraphKind::Grassmann ? "grassmann" : "ortho"; }

inline GraphKind parse_graph_kind(const std::string& s) {
  if (s == "grassmann") return GraphKind::Grassmann;
  if (s == "ortho") return GraphKind::Ortho;
  throw ParseError("unknown edge kind '" + s + "' (expected grassmann|ortho)");
}

inline bool has_edge(GraphKind kind, const Subspace& x, const Subspace& y) {
  return kind == GraphKind::Grassmann ? is_adjacent(x, y) : is_ortho_adjacent(x, y);
}

/// Distance in the Grassmann graph: k - dim(X∩Y).
inline std::size_t grassmann_distance(const Subspace& x, const Subspace& y) {
  detail::same_dim(x, y, "grassmann_distance");
  return x.dim() - intersection_dim(x, y);
}

/// A shortest path, validated on construction.
///
/// Grassmann paths must have adjacent steps and length k - dim(X∩Y).
/// Ortho paths must have ortho-adjacent steps; their length is certified
/// minimal when it equals the Grassmann distance (which bounds the ortho
/// distance from below) or when it is 2 between adjacent non-compatible
/// endpoints (which are never ortho-adjacent).
class GeodesicPath {
 public:
  static GeodesicPath make(std::vector<Subspace> vertices, GraphKind kind) {
    detail::require(!vertices.empty(), "GeodesicPath: empty vertex list");
    for (std::size_t i = 1; i < vertices.size(); ++i) {
      detail::same_dim(vertices[i - 1], vertices[i], "GeodesicPath");
      if (!has_edge(kind, vertices[i - 1], vertices[i]))
        throw InvariantViolation("GeodesicPath: step " + std::to_string(i - 1) + " is not an edge");
    }
    const std::size_t len = vertices.size() - 1;
    const Subspace& a = vertices.front();
    const Subspace& b = vertices.back();
    const std::size_t d = grassmann_distance(a, b);
    bool shortest = len == d;
    if (kind == GraphKind::Ortho && !shortest)
      shortest = len == 2 && d == 1 && !is_compatible(a, b);
    if (!shortest) throw InvariantViolation("GeodesicPath: length is not the graph distance");
    GeodesicPath p;
    p.vertices_ = std::move(vertices);
    p.kind_ = kind;
    return p;
  }

  const std::vector<Subspace>& vertices() const { return vertices_; }
  std::size_t length() const { return vertices_.size() - 1; }
  GraphKind kind() const { return kind_; }
  const Subspace& front() const { return vertices_.front(); }
  const Subspace& back() const { return vertices_.back(); }

  /// First i with (v_i, v_{i+1}) not ortho-adjacent.
  std::optional<std::size_t> first_non_ortho_step() const {
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
      if (!is_ortho_adjacent(vertices_[i], vertices_[i + 1])) return i;
    return std::nullopt;
  }

  bool is_ortho_path() const { return !first_non_ortho_step().has_value(); }

 private:
  GeodesicPath() = default;
  std::vector<Subspace> vertices_;
  GraphKind kind_ = GraphKind::Grassmann;
};

namespace detail {

inline std::vector<Vector> random_recombination(const std::vector<Vector>& rows, Rng& rng) {
  const std::size_t d = rows.size();
  if (d == 0) return rows;
  const std::size_t n = rows.front().size();
  for (;;) {
    ExactMatrix r(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) r(i, j) = random_gaussian_integer(rng, 2);
    if (rank(r) < d) continue;
    return matmul(r, ExactMatrix::from_rows(rows, n)).row_vectors();
  }
}

}  // namespace detail

/// Geodesic of the Grassmann graph from X to Y. With W = X∩Y and x_i, y_i the
/// canonical bases of the complements of W in X and Y, step i swaps x_i for
/// y_i. A seed replaces both bases by random recombinations.
inline GeodesicPath build_geodesic(const Subspace& x, const Subspace& y,
                                   std::optional<std::uint64_t> seed = std::nullopt) {
  detail::same_dim(x, y, "build_geodesic");
  detail::require(x != y, "build_geodesic: endpoints coincide");
  const std::size_t n = x.ambient();
  const Subspace w = intersect(x, y);
  std::vector<Vector> xs = ortho_within(w, x).basis_vectors();
  std::vector<Vector> ys = ortho_within(w, y).basis_vectors();
  if (seed) {
    Rng rng(*seed);
    xs = detail::random_recombination(xs, rng);
    ys = detail::random_recombination(ys, rng);
  }
  const std::vector<Vector> ws = w.basis_vectors();
  const Subspace s = sum(x, y);

  std::vector<Subspace> path{x};
  for (std::size_t i = 1; i < xs.size(); ++i) {
    std::vector<Vector> rows = ws;
    rows.insert(rows.end(), ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(i));
    rows.insert(rows.end(), xs.begin() + static_cast<std::ptrdiff_t>(i), xs.end());
    Subspace z = Subspace::span(rows, n);
    detail::ensure(z.contains(w) && s.contains(z), "build_geodesic: vertex leaves [X∩Y, X+Y]");
    path.push_back(std::move(z));
  }
  path.push_back(y);
  return GeodesicPath::make(std::move(path), GraphKind::Grassmann);
}

/// Geodesic X ... Z ... Y; Z must lie between X and Y metrically.
inline GeodesicPath build_geodesic_through(const Subspace& x, const Subspace& z, const Subspace& y) {
  detail::same_dim(x, z, "build_geodesic_through");
  detail::same_dim(z, y, "build_geodesic_through");
  if (grassmann_distance(x, z) + grassmann_distance(z, y) != grassmann_distance(x, y))
    throw PreconditionError("build_geodesic_through: Z is not a geodesic waypoint");
  std::vector<Subspace> path{x};
  if (z != x) {
    const auto first = build_geodesic(x, z).vertices();
    path.insert(path.end(), first.begin() + 1, first.end());
  }
  if (y != z) {
    const auto second = build_geodesic(z, y).vertices();
    path.insert(path.end(), second.begin() + 1, second.end());
  }
  return GeodesicPath::make(std::move(path), GraphKind::Grassmann);
}

enum class TriangleType { T1Only, T2Only, Both };

inline const char* to_string(TriangleType t) {
  switch (t) {
    case TriangleType::T1Only: return "T1only";
    case TriangleType::T2Only: return "T2only";
    case TriangleType::Both: return "Both";
  }
  return "?";
}

/// For mutually adjacent X, Y, Z: T1 is dim(X∩Y∩Z) = k-1, T2 is
/// dim(X+Y+Z) = k+1. At least one holds.
inline TriangleType triangle_classify(const Subspace& x, const Subspace& y, const Subspace& z) {
  if (!is_adjacent(x, y) || !is_adjacent(y, z) || !is_adjacent(x, z))
    throw PreconditionError("triangle_classify: inputs are not mutually adjacent");
  const std::size_t k = x.dim();
  const std::size_t meet = intersect(intersect(x, y), z).dim();
  const std::size_t join = sum(sum(x, y), z).dim();
  const bool t1 = meet + 1 == k;
  const bool t2 = join == k + 1;
  detail::ensure(t1 || t2, "triangle_classify: neither T1 nor T2 holds");
  if (!t1) detail::ensure(meet + 2 == k && k > 1, "triangle_classify: T1 fails but meet is not k-2");
  if (!t2) detail::ensure(join == k + 2 && k + 1 < x.ambient(), "triangle_classify: T2 fails but join is not k+2");
  if (t1 && t2) return TriangleType::Both;
  return t1 ? TriangleType::T1Only : TriangleType::T2Only;
}

/// X in the star of the (k-1)-subspace S.
inline bool star_contains(const Subspace& s, const Subspace& x) {
  detail::same_ambient(s, x, "star_contains");
  detail::require(s.dim() + 1 == x.dim(), "star_contains: need dim S = dim X - 1");
  return x.contains(s);
}

/// X in the top of the (k+1)-subspace U.
inline bool top_contains(const Subspace& u, const Subspace& x) {
  detail::same_ambient(u, x, "top_contains");
  detail::require(u.dim() == x.dim() + 1, "top_contains: need dim U = dim X + 1");
  return u.contains(x);
}

/// Explicit finite vertex set with one of the two edge relations.
class FiniteUniverse {
 public:
  FiniteUniverse(std::vector<Subspace> vertices, GraphKind edges)
      : vertices_(std::move(vertices)), edges_(edges) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i > 0) detail::same_dim(vertices_[0], vertices_[i], "FiniteUniverse");
      if (!index_.emplace(vertices_[i].key(), i).second)
        throw PreconditionError("FiniteUniverse: duplicate vertex " + vertices_[i].to_string());
    }
  }

  const std::vector<Subspace>& vertices() const { return vertices_; }
  GraphKind edge_kind() const { return edges_; }
  std::size_t size() const { return vertices_.size(); }

  std::optional<std::size_t> index_of(const Subspace& x) const {
    auto it = index_.find(x.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool has_edge(std::size_t i, std::size_t j) const {
    return i != j && ogl::has_edge(edges_, vertices_[i], vertices_[j]);
  }

  std::string to_dot() const {
    std::string out = "graph universe {\n";
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      out += "  v" + std::to_string(i) + " [label=\"" + vertices_[i].to_string() + "\"];\n";
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      for (std::size_t j = i + 1; j < vertices_.size(); ++j)
        if (has_edge(i, j)) out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + ";\n";
    return out + "}\n";
  }

 private:
  std::vector<Subspace> vertices_;
  GraphKind edges_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Shortest-path length inside the universe, or nullopt if unreachable.
inline std::optional<std::size_t> bfs_distance(const FiniteUniverse& u, const Subspace& x,
                                               const Subspace& y) {
  const auto from = u.index_of(x);
  const auto to = u.index_of(y);
  if (!from || !to) throw PreconditionError("bfs_distance: vertex not in universe");
  std::vector<std::size_t> dist(u.size(), SIZE_MAX);
  std::deque<std::size_t> queue{*from};
  dist[*from] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (v == *to) return dist[v];
    for (std::size_t w = 0; w < u.size(); ++w) {
      if (dist[w] != SIZE_MAX || !u.has_edge(v, w)) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

/// A shortest path inside the universe (both endpoints included), or nullopt.
inline std::optional<std::vector<Subspace>> bfs_path(const FiniteUniverse& u, const Subspace& x, const Subspace& y) {
  const auto from = u.index_of(x);
  const auto to = u.index_of(y);
  if (!from || !to) throw PreconditionError("bfs_path: vertex not in universe");
  std::vector<std::size_t> parent(u.size(), SIZE_MAX);
  std::deque<std::size_t> queue{*from};
  parent[*from] = *from;
  while (!queue.empty() && parent[*to] == SIZE_MAX) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w = 0; w < u.size(); ++w) {
      if (parent[w] != SIZE_MAX || !u.has_edge(v, w)) continue;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  if (parent[*to] == SIZE_MAX) return std::nullopt;
  std::vector<Subspace> path;
  for (std::size_t v = *to;; v = parent[v]) {
    path.push_back(u.vertices()[v]);
    if (v == *from) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

/// All k-element index subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// All k-subspaces spanned by k vectors of `basis` (assumed independent).
inline std::vector<Subspace> basis_spanned(const std::vector<Vector>& basis, std::size_t k) {
  detail::require(!basis.empty(), "basis_spanned: empty basis");
  const std::size_t n = basis.front().size();
  std::vector<Subspace> out;
  for (const auto& idx : k_subsets(basis.size(), k)) out.push_back(span_of(basis, idx, n));
  return out;
}

inline FiniteUniverse basis_universe(const std::vector<Vector>& basis, std::size_t k, GraphKind edges) {
  return {basis_spanned(basis, k), edges};
}

/// J(n,k): the k-subsets of the standard basis of C^n.
inline FiniteUniverse johnson_universe(std::size_t n, std::size_t k, GraphKind edges) {
  std::vector<Vector> e(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
  return basis_universe(e, k, edges);
}

}  // namespace ogl

#endif  // OGL_GRASSMANN_HPP
