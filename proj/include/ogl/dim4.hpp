// Copyright 2026 The ogl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGL_DIM4_HPP
#define OGL_DIM4_HPP

// Planes of C^4. Here X and X^⊥ have the same ortho-neighbours, which gives
// ortho-graph automorphisms that ignore ordinary adjacency.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ogl/generators.hpp"
#include "ogl/grassmann.hpp"
#include "ogl/orthograph.hpp"
#include "ogl/subspace.hpp"

namespace ogl {

using SubspaceMap = std::function<Subspace(const Subspace&)>;

namespace detail {

inline bool is_c4_plane(const Subspace& x) { return x.ambient() == 4 && x.dim() == 2; }

}  // namespace detail

/// Finite set of planes of C^4 closed under X -> X^⊥.
class PerpClosedFamily {
 public:
  PerpClosedFamily() = default;

  /// Throws PreconditionError unless every member is a plane of C^4 and the
  /// set contains the orthocomplement of each member. Duplicates collapse.
  static PerpClosedFamily make(const std::vector<Subspace>& members) {
    PerpClosedFamily f;
    for (const auto& x : members) {
      detail::require(detail::is_c4_plane(x), "PerpClosedFamily: members must be planes of C^4");
      if (f.keys_.insert(x.key()).second) f.members_.push_back(x);
    }
    for (const auto& x : f.members_)
      if (!f.contains(orthocomplement(x)))
        throw PreconditionError("PerpClosedFamily: not closed under orthocomplement, missing the complement of " +
                                x.to_string());
    return f;
  }

  /// {X_1, X_1^⊥, X_2, X_2^⊥, ...}.
  static PerpClosedFamily from_representatives(const std::vector<Subspace>& reps) {
    std::vector<Subspace> all;
    for (const auto& x : reps) {
      all.push_back(x);
      all.push_back(orthocomplement(x));
    }
    return make(all);
  }

  const std::vector<Subspace>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  bool contains(const Subspace& x) const { return keys_.count(x.key()) > 0; }

 private:
  std::vector<Subspace> members_;
  std::set<std::string> keys_;
};

/// X -> X^⊥ on the family, identity elsewhere.
class ExceptionalMap {
 public:
  explicit ExceptionalMap(PerpClosedFamily family) : family_(std::move(family)) {}

  Subspace operator()(const Subspace& x) const {
    detail::require(detail::is_c4_plane(x), "exceptional map: argument must be a plane of C^4");
    return family_.contains(x) ? orthocomplement(x) : x;
  }

  const PerpClosedFamily& family() const { return family_; }
  bool is_identity() const { return family_.empty(); }

 private:
  PerpClosedFamily family_;
};

inline ExceptionalMap exceptional_map(PerpClosedFamily family) { return ExceptionalMap(std::move(family)); }

/// Exchanges a and b and fixes everything else. Unless b = a^⊥ this breaks
/// ortho-adjacency; used as a negative control.
inline SubspaceMap transposition_map(Subspace a, Subspace b) {
  return [a = std::move(a), b = std::move(b)](const Subspace& x) {
    if (x == a) return b;
    if (x == b) return a;
    return x;
  };
}

struct AutomorphismReport {
  std::size_t pairs_checked = 0;
  /// Pairs whose ortho-adjacency status changes under the map.
  std::vector<SubspacePair> violations;
  /// Sampled subspaces with f(f(X)) != X.
  std::vector<Subspace> involution_failures;

  bool ok() const { return violations.empty() && involution_failures.empty(); }
};

/// Checks is_ortho_adjacent(X,Y) == is_ortho_adjacent(f(X), f(Y)) on each
/// pair, and that f is an involution on every sampled subspace.
inline AutomorphismReport check_ortho_automorphism(const SubspaceMap& f, const std::vector<SubspacePair>& pairs) {
  AutomorphismReport r;
  std::set<std::string> seen;
  auto check_involution = [&](const Subspace& x) {
    if (seen.insert(x.key()).second && f(f(x)) != x) r.involution_failures.push_back(x);
  };
  for (const auto& [x, y] : pairs) {
    detail::require(detail::is_c4_plane(x) && detail::is_c4_plane(y),
                    "check_ortho_automorphism: pairs must be planes of C^4");
    ++r.pairs_checked;
    if (x == y) continue;
    const Subspace fx = f(x), fy = f(y);
    if (is_ortho_adjacent(x, y) != (fx != fy && is_ortho_adjacent(fx, fy))) r.violations.push_back({x, y});
    check_involution(x);
    check_involution(y);
  }
  return r;
}

/// (X, Y) with X in the family, Y outside it, X adjacent to Y but f(X) = X^⊥
/// not adjacent to f(Y) = Y. So f does not preserve the Grassmann graph.
inline SubspacePair find_adjacency_breaking_pair(const ExceptionalMap& f) {
  detail::require(!f.is_identity(), "find_adjacency_breaking_pair: the family is empty");
  const auto& fam = f.family();
  for (const auto& x : fam.members()) {
    const Vector x1 = x.basis().row_vector(0), x2 = x.basis().row_vector(1);
    const Subspace perp = orthocomplement(x);
    for (const auto& v : perp.basis_vectors())
      for (long t = 1; t <= 4; ++t) {
        const Subspace y = Subspace::span({x1, detail::combo(x2, Scalar(t), v)}, 4);
        if (fam.contains(y)) continue;
        if (is_adjacent(x, y) && !is_adjacent(f(x), f(y))) return {x, y};
      }
  }
  throw SearchExhausted("find_adjacency_breaking_pair: no pair found");
}

// ---------------------------------------------------------------------------
// Generators.

/// {X_1, X_1^⊥, ..., X_m, X_m^⊥} with random X_i.
inline PerpClosedFamily random_perp_closed_family(std::size_t representatives, Rng& rng) {
  std::vector<Subspace> reps;
  for (std::size_t i = 0; i < representatives; ++i) reps.push_back(random_subspace(4, 2, rng, 2));
  return PerpClosedFamily::from_representatives(reps);
}

/// Pairs of planes weighted towards the interesting cases: family members,
/// ortho-adjacent pairs, adjacent non-compatible pairs, basis-spanned pairs
/// and generic pairs.
inline std::vector<SubspacePair> mixed_pairs_c4(const PerpClosedFamily& fam, std::size_t count, Rng& rng) {
  auto member_or_random = [&]() {
    if (fam.empty() || rng.below(4) == 0) return random_subspace(4, 2, rng, 2);
    return fam.members()[rng.below(fam.size())];
  };
  std::vector<SubspacePair> out;
  out.reserve(count);
  while (out.size() < count) {
    Subspace x = member_or_random();
    switch (rng.below(6)) {
      case 0:
      case 1: {
        const Subspace p = random_line_in(x, rng);
        out.push_back({x, sum(p, random_line_in(orthocomplement(x), rng))});
        break;
      }
      case 2: {
        const Subspace p = random_line_in(x, rng);
        const Subspace y = sum(p, line(random_vector(4, rng, 2)));
        if (y.dim() == 2) out.push_back({x, y});
        break;
      }
      case 3:
        out.push_back({x, member_or_random()});
        break;
      case 4: {
        const auto b = random_orthogonal_basis(4, rng);
        const auto idx = k_subsets(4, 2);
        out.push_back({span_of(b, idx[rng.below(6)], 4), span_of(b, idx[rng.below(6)], 4)});
        break;
      }
      default:
        out.push_back({x, random_subspace(4, 2, rng, 2)});
    }
  }
  return out;
}

enum class AnglePattern { Orthogonal, Isoclinic, Distinct, OneRightAngle };

/// Disjoint planes X, Y of C^4 whose principal angles have rational squared
/// cosines: a random unitary image of span{e1,e2} and
/// span{a1 e1 + c1 e3, a2 e2 + c2 e4}.
inline SubspacePair disjoint_pair_c4(AnglePattern pattern, Rng& rng) {
  auto nonzero = [&] {
    Scalar s;
    while (s.is_zero()) s = random_gaussian_integer(rng, 3);
    return s;
  };
  Scalar a1 = nonzero(), c1 = nonzero(), a2 = nonzero(), c2 = nonzero();
  switch (pattern) {
    case AnglePattern::Orthogonal:
      a1 = 0;
      a2 = 0;
      break;
    case AnglePattern::Isoclinic:
      a2 = a1;
      c2 = c1;
      break;
    case AnglePattern::OneRightAngle:
      a2 = 0;
      break;
    case AnglePattern::Distinct:
      while ((a1 * c2).norm() == (a2 * c1).norm()) c2 = nonzero();
      break;
  }
  const ExactMatrix u = random_unitary(4, rng);
  auto img = [&](Vector v) { return matvec(u, v); };
  const Subspace x = Subspace::span({img({1, 0, 0, 0}), img({0, 1, 0, 0})}, 4);
  const Subspace y = Subspace::span({img({a1, 0, c1, 0}), img({0, a2, 0, c2})}, 4);
  return {x, y};
}

// ---------------------------------------------------------------------------
// Orthogonality through ortho-adjacency.

struct OrthogonalityEvidence {
  /// Every examined common ortho-neighbour Z had exactly two extensions.
  bool orthogonal = false;
  /// All principal angles equal, so the common neighbours form a family.
  bool isoclinic = false;
  std::vector<Subspace> middles;
  /// Per middle: planes ortho-adjacent to X, Y and that middle.
  std::vector<std::size_t> extension_counts;
};

namespace detail {

/// Matrix of P_X P_Y restricted to X, in the coordinates of X's basis rows.
inline ExactMatrix compressed_product(const Subspace& x, const Subspace& y) {
  const ExactMatrix a = transpose(x.basis());
  const ExactMatrix astar = conjugate(x.basis());
  return matmul(inverse(matmul(astar, a)), matmul(astar, matmul(y.projection(), a)));
}

inline Vector from_coords(const Subspace& x, std::span<const Scalar> c) {
  Vector v(x.ambient());
  for (std::size_t r = 0; r < x.dim(); ++r)
    for (std::size_t j = 0; j < x.ambient(); ++j) v[j] += c[r] * x.basis()(r, j);
  return v;
}

inline std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  return mpq_class(sqrt(num), sqrt(den));
}

inline ExactMatrix minus_scalar(ExactMatrix m, const mpq_class& lambda) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= Scalar(lambda);
  return m;
}

}  // namespace detail

/// Common ortho-neighbours of disjoint planes X, Y of C^4 and, for each, the
/// number of planes ortho-adjacent to X, Y and it.
///
/// A common neighbour is span(p, q) with p in X an eigenvector of the
/// compression of P_X P_Y to X and q its partner in Y. Distinct eigenvalues
/// give exactly two such planes; equal eigenvalues give a family, of which
/// `samples` lines of X (times `samples` lines of Y if X ⊥ Y) are examined.
/// Throws OutOfField when the eigenvalues are irrational.
inline OrthogonalityEvidence orthogonality_evidence(const Subspace& x, const Subspace& y, std::size_t samples = 3) {
  detail::require(detail::is_c4_plane(x) && detail::is_c4_plane(y),
                  "orthogonality_by_ortho_adjacency: need planes of C^4");
  detail::require(intersection_dim(x, y) == 0, "orthogonality_by_ortho_adjacency: X and Y must meet trivially");
  detail::require(samples >= 2, "orthogonality_by_ortho_adjacency: need at least 2 samples");

  const ExactMatrix m = detail::compressed_product(x, y);
  const Scalar tr = m(0, 0) + m(1, 1);
  const Scalar det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  detail::ensure(tr.is_real() && det.is_real(), "orthogonality_by_ortho_adjacency: compression is not self-adjoint");
  const mpq_class disc = tr.re() * tr.re() - 4 * det.re();

  OrthogonalityEvidence ev;
  ev.isoclinic = sgn(disc) == 0;
  if (ev.isoclinic && m.is_zero()) {
    for (const auto& p : distinct_lines_in(x, samples))
      for (const auto& q : distinct_lines_in(y, samples)) {
        const Subspace z = sum(p, q);
        const auto [z1, z2] = two_extensions(x, y, z);
        const auto found = common_neighbors_in_shared_basis(x, y, z);
        detail::ensure(std::count(found.begin(), found.end(), z1) == 1 && std::count(found.begin(), found.end(), z2) == 1,
                       "orthogonality_by_ortho_adjacency: exhaustion misses a constructed extension");
        ev.middles.push_back(z);
        ev.extension_counts.push_back(found.size());
      }
  } else {
    if (ev.isoclinic) {
      for (const auto& p : distinct_lines_in(x, samples)) {
        const Vector pv = p.basis().row_vector(0);
        ev.middles.push_back(Subspace::span({pv, matvec(y.projection(), pv)}, 4));
      }
    } else {
      const auto root = detail::rational_sqrt(disc);
      if (!root)
        throw OutOfField("orthogonality_by_ortho_adjacency: principal angles have irrational cosines");
      const ExactMatrix my = detail::compressed_product(y, x);
      const mpq_class eigenvalues[] = {(tr.re() + *root) / 2, (tr.re() - *root) / 2};
      for (const mpq_class& lambda : eigenvalues) {
        const ExactMatrix kx = kernel_basis(detail::minus_scalar(m, lambda));
        detail::ensure(kx.rows() == 1, "orthogonality_by_ortho_adjacency: eigenspace is not a line");
        const Vector p = detail::from_coords(x, kx.row(0));
        Vector q;
        if (sgn(lambda) != 0) {
          q = matvec(y.projection(), p);
        } else {
          const ExactMatrix ky = kernel_basis(my);
          detail::ensure(ky.rows() == 1, "orthogonality_by_ortho_adjacency: Y has no partner for a right angle");
          q = detail::from_coords(y, ky.row(0));
        }
        ev.middles.push_back(Subspace::span({p, q}, 4));
      }
    }
    for (const auto& z : ev.middles) {
      std::size_t c = 0;
      for (const auto& other : ev.middles)
        if (other != z && is_ortho_adjacent(other, z)) ++c;
      ev.extension_counts.push_back(c);
    }
  }
  for (const auto& z : ev.middles)
    detail::ensure(detail::common_neighbor_of(z, x, y),
                   "orthogonality_by_ortho_adjacency: constructed middle is not a common ortho-neighbour");
  ev.orthogonal = !ev.middles.empty() &&
                  std::all_of(ev.extension_counts.begin(), ev.extension_counts.end(), [](auto c) { return c == 2; });
  detail::ensure(ev.orthogonal == is_orthogonal(x, y),
                 "orthogonality_by_ortho_adjacency: disagrees with the direct orthogonality test");
  return ev;
}

inline bool orthogonality_by_ortho_adjacency(const Subspace& x, const Subspace& y, std::size_t samples = 3) {
  return orthogonality_evidence(x, y, samples).orthogonal;
}

// ---------------------------------------------------------------------------
// Automorphisms of the basis-spanned ortho graph on planes of C^4.

/// Findings of a brute-force search. "Explained" means: there is a
/// permutation s of the basis with f(span{b_i,b_j}) equal to
/// span{b_s(i),b_s(j)} or its orthocomplement for every vertex. Anti-unitary
/// maps conjugating coordinates in the basis fix every vertex, so they add
/// nothing here.
struct ConjectureExperimentReport {
  std::size_t universe_size = 0;
  std::size_t edge_count = 0;
  std::size_t automorphisms = 0;
  /// Explained with no orthocomplement needed.
  std::size_t unitary_induced = 0;
  std::size_t explained = 0;
  /// Automorphisms with no explanation, as vertex permutations.
  std::vector<std::vector<std::size_t>> unexplained;
};

namespace detail {

inline void enumerate_automorphisms(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& img,
                                    std::vector<bool>& used, std::size_t v,
                                    const std::function<void(const std::vector<std::size_t>&)>& emit) {
  const std::size_t n = adj.size();
  if (v == n) {
    emit(img);
    return;
  }
  for (std::size_t w = 0; w < n; ++w) {
    if (used[w]) continue;
    bool fits = true;
    for (std::size_t u = 0; u < v && fits; ++u) fits = adj[u][v] == adj[img[u]][w];
    if (!fits) continue;
    used[w] = true;
    img[v] = w;
    enumerate_automorphisms(adj, img, used, v + 1, emit);
    used[w] = false;
  }
}

}  // namespace detail

inline ConjectureExperimentReport dim4_conjecture_experiment(const std::vector<Vector>& basis) {
  detail::require_orthogonal_basis(basis, 4, "dim4_conjecture_experiment");
  const auto subsets = k_subsets(4, 2);
  const FiniteUniverse u = basis_universe(basis, 2, GraphKind::Ortho);
  const std::size_t n = u.size();

  ConjectureExperimentReport r;
  r.universe_size = n;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      adj[i][j] = u.has_edge(i, j);
      if (i < j && adj[i][j]) ++r.edge_count;
    }

  auto index_of_set = [&](std::vector<std::size_t> s) {
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::find(subsets.begin(), subsets.end(), s) - subsets.begin());
  };
  std::vector<std::size_t> complement(n);
  for (std::size_t v = 0; v < n; ++v) complement[v] = *u.index_of(orthocomplement(u.vertices()[v]));

  std::vector<std::size_t> perm(4);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> induced;  // vertex maps of basis permutations
  do {
    std::vector<std::size_t> img(n);
    for (std::size_t v = 0; v < n; ++v) img[v] = index_of_set({perm[subsets[v][0]], perm[subsets[v][1]]});
    induced.push_back(img);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::size_t> img(n);
  std::vector<bool> used(n, false);
  detail::enumerate_automorphisms(adj, img, used, 0, [&](const std::vector<std::size_t>& f) {
    ++r.automorphisms;
    bool exact = false, loose = false;
    for (const auto& g : induced) {
      bool eq = true, up_to_perp = true;
      for (std::size_t v = 0; v < n; ++v) {
        eq = eq && f[v] == g[v];
        up_to_perp = up_to_perp && (f[v] == g[v] || f[v] == complement[g[v]]);
      }
      exact = exact || eq;
      loose = loose || up_to_perp;
    }
    if (exact) ++r.unitary_induced;
    if (loose)
      ++r.explained;
    else
      r.unexplained.push_back(f);
  });
  return r;
}

}  // namespace ogl

#endif  // OGL_DIM4_HPP
