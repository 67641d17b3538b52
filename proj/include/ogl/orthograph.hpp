// Copyright 2026 The ogl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGL_ORTHOGRAPH_HPP
#define OGL_ORTHOGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ogl/generators.hpp"
#include "ogl/grassmann.hpp"
#include "ogl/subspace.hpp"

namespace ogl {

// The ortho-Grassmann graph: vertices are k-subspaces, edges join adjacent
// compatible pairs. Everything here constructs explicit subspaces and then
// re-checks them with the exact predicates of subspace.hpp.

inline constexpr std::size_t kDefaultWitnessBudget = 5;
inline constexpr std::size_t kDefaultSearchBudget = 64;

namespace detail {

/// a + t*b
inline Vector combo(const Vector& a, const Scalar& t, const Vector& b) {
  Vector out = a;
  if (t.is_zero()) return out;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += t * b[j];
  return out;
}

inline Subspace span_with(const Subspace& base, const std::vector<Vector>& extra) {
  std::vector<Vector> rows = base.basis_vectors();
  rows.insert(rows.end(), extra.begin(), extra.end());
  if (rows.empty()) return Subspace::zero(base.ambient());
  return Subspace::span(rows, base.ambient());
}

inline void require_adjacent_noncompatible(const Subspace& x, const Subspace& y, const char* op) {
  detail::same_dim(x, y, op);
  if (!is_adjacent(x, y)) throw PreconditionError(std::string(op) + ": X and Y are not adjacent");
  if (is_compatible(x, y)) throw PreconditionError(std::string(op) + ": X and Y are compatible");
}

inline bool common_neighbor_of(const Subspace& z, const Subspace& x, const Subspace& y) {
  return is_ortho_adjacent(z, x) && is_ortho_adjacent(z, y);
}

inline void add_unique(std::vector<Subspace>& out, std::set<std::string>& seen, Subspace z) {
  if (seen.insert(z.key()).second) out.push_back(std::move(z));
}

// Several operations accept an optional subspace V and then work in the
// Grassmannian of V instead of the whole space.

inline Subspace complement_in(const Subspace& s, const std::optional<Subspace>& within) {
  return within ? ortho_within(s, *within) : orthocomplement(s);
}

inline std::size_t ambient_dim(const Subspace& x, const std::optional<Subspace>& within) {
  return within ? within->dim() : x.ambient();
}

inline void require_inside(const std::optional<Subspace>& within, const Subspace& x, const char* op) {
  if (within && !within->contains(x))
    throw PreconditionError(std::string(op) + ": argument is not inside the given ambient subspace");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Common neighbours of an adjacent pair.

enum class NeighborType { Type1, Type2 };

inline const char* to_string(NeighborType t) { return t == NeighborType::Type1 ? "Type1" : "Type2"; }

/// A parameterised family of common ortho-neighbours of an adjacent pair.
/// Type1: (X∩Y)+P for lines P in (X+Y)^⊥. Type2: S+W for (k-2)-subspaces W of
/// X∩Y, S the orthogonal complement of X∩Y in X+Y. parameter_space_dim is
/// the complex dimension of the parameter space (0 means a single member).
struct CommonNeighborFamily {
  NeighborType kind;
  SubspacePair base_pair;
  std::size_t parameter_space_dim;
};

/// Families that are nonempty for the adjacent pair (X, Y).
inline std::vector<CommonNeighborFamily> common_neighbor_families(const Subspace& x, const Subspace& y,
                                                                 const std::optional<Subspace>& within = std::nullopt) {
  detail::same_dim(x, y, "common_neighbor_families");
  detail::require(is_adjacent(x, y), "common_neighbor_families: X and Y are not adjacent");
  const std::size_t n = detail::ambient_dim(x, within), k = x.dim();
  std::vector<CommonNeighborFamily> out;
  if (k + 1 < n) out.push_back({NeighborType::Type1, {x, y}, n - k - 2});
  if (k > 1) out.push_back({NeighborType::Type2, {x, y}, k - 2});
  return out;
}

/// Z = (X∩Y) + P with P a line orthogonal to X+Y.
inline Subspace type1_neighbor(const Subspace& x, const Subspace& y, const Subspace& p) {
  detail::same_dim(x, y, "type1_neighbor");
  detail::same_ambient(x, p, "type1_neighbor");
  detail::require(is_adjacent(x, y), "type1_neighbor: X and Y are not adjacent");
  detail::require(x.dim() + 1 < x.ambient(), "type1_neighbor: need k < n-1");
  detail::require(p.dim() == 1, "type1_neighbor: P must be a line");
  detail::require(is_orthogonal(p, sum(x, y)), "type1_neighbor: P is not orthogonal to X+Y");
  Subspace z = sum(intersect(x, y), p);
  detail::ensure(detail::common_neighbor_of(z, x, y), "type1_neighbor: result is not a common ortho-neighbour");
  return z;
}

/// Orthogonal complement of X∩Y in X+Y (2-dimensional for adjacent X, Y).
inline Subspace adjacent_pair_complement(const Subspace& x, const Subspace& y) {
  return ortho_within(intersect(x, y), sum(x, y));
}

/// Z = S + W with S the complement of X∩Y in X+Y and W ⊆ X∩Y of dim k-2.
inline Subspace type2_neighbor(const Subspace& x, const Subspace& y, const Subspace& w) {
  detail::same_dim(x, y, "type2_neighbor");
  detail::same_ambient(x, w, "type2_neighbor");
  detail::require(is_adjacent(x, y), "type2_neighbor: X and Y are not adjacent");
  detail::require(x.dim() > 1, "type2_neighbor: need k > 1");
  detail::require(w.dim() + 2 == x.dim(), "type2_neighbor: dim W must be k-2");
  const Subspace meet = intersect(x, y);
  detail::require(meet.contains(w), "type2_neighbor: W is not inside X∩Y");
  Subspace z = sum(adjacent_pair_complement(x, y), w);
  detail::ensure(detail::common_neighbor_of(z, x, y), "type2_neighbor: result is not a common ortho-neighbour");
  return z;
}

/// Which construction produced the common ortho-neighbour Z: Type2 iff Z ⊆ X+Y.
inline NeighborType classify_common_neighbor(const Subspace& x, const Subspace& y, const Subspace& z) {
  detail::require_adjacent_noncompatible(x, y, "classify_common_neighbor");
  detail::same_dim(x, z, "classify_common_neighbor");
  if (!detail::common_neighbor_of(z, x, y))
    throw PreconditionError("classify_common_neighbor: Z is not ortho-adjacent to both X and Y");
  const Subspace meet = intersect(x, y);
  const Subspace join = sum(x, y);
  if (join.contains(z)) {
    const Subspace w = intersect(z, meet);
    detail::ensure(type2_neighbor(x, y, w) == z, "classify_common_neighbor: Type2 round trip failed");
    return NeighborType::Type2;
  }
  const Subspace p = ortho_within(meet, z);
  detail::ensure(type1_neighbor(x, y, p) == z, "classify_common_neighbor: Type1 round trip failed");
  return NeighborType::Type1;
}

/// Lines span(c0 + t*c1), t = 0..count-1, inside a subspace of dim >= 2.
inline std::vector<Subspace> distinct_lines_in(const Subspace& v, std::size_t count) {
  detail::require(v.dim() >= 2, "distinct_lines_in: need dim >= 2");
  const Vector c0 = v.basis().row_vector(0), c1 = v.basis().row_vector(1);
  std::vector<Subspace> out;
  for (std::size_t t = 0; t < count; ++t) out.push_back(line(detail::combo(c0, Scalar(static_cast<long>(t)), c1)));
  return out;
}

/// Hyperplanes span(w0 + t*w1, w2, ...), t = 0..count-1, of a subspace of dim >= 2.
inline std::vector<Subspace> distinct_hyperplanes_in(const Subspace& v, std::size_t count) {
  detail::require(v.dim() >= 2, "distinct_hyperplanes_in: need dim >= 2");
  const auto rows = v.basis_vectors();
  std::vector<Subspace> out;
  for (std::size_t t = 0; t < count; ++t) {
    std::vector<Vector> h{detail::combo(rows[0], Scalar(static_cast<long>(t)), rows[1])};
    h.insert(h.end(), rows.begin() + 2, rows.end());
    out.push_back(Subspace::span(h, v.ambient()));
  }
  return out;
}

/// Either the complete list of common ortho-neighbours (exact) or at least
/// `budget` pairwise-distinct members of an infinite family.
struct CommonNeighborCount {
  bool exact = false;
  std::vector<Subspace> neighbors;
};

/// Common ortho-neighbours of an adjacent non-compatible pair. Every family
/// whose parameter space has positive dimension is infinite; otherwise each
/// family is a single subspace and the list is complete.
inline CommonNeighborCount count_common_neighbors(const Subspace& x, const Subspace& y,
                                                  std::size_t budget = kDefaultWitnessBudget,
                                                  const std::optional<Subspace>& within = std::nullopt) {
  detail::require_adjacent_noncompatible(x, y, "count_common_neighbors");
  detail::require(budget > 0, "count_common_neighbors: budget must be positive");
  detail::require_inside(within, sum(x, y), "count_common_neighbors");
  const std::size_t n = detail::ambient_dim(x, within);
  const Subspace meet = intersect(x, y);
  const Subspace outside = detail::complement_in(sum(x, y), within);
  const auto families = common_neighbor_families(x, y, within);

  CommonNeighborCount out;
  std::set<std::string> seen;
  out.exact = true;
  for (const auto& f : families)
    if (f.parameter_space_dim > 0) out.exact = false;

  if (out.exact) {
    for (const auto& f : families) {
      if (f.kind == NeighborType::Type1)
        detail::add_unique(out.neighbors, seen, type1_neighbor(x, y, outside));
      else
        detail::add_unique(out.neighbors, seen, type2_neighbor(x, y, Subspace::zero(x.ambient())));
    }
    detail::ensure(out.neighbors.size() == families.size(), "count_common_neighbors: families overlap");
    if (n == 4 && x.dim() == 2)
      detail::ensure(is_orthogonal(out.neighbors.at(0), out.neighbors.at(1)),
                     "count_common_neighbors: the two neighbours are not orthogonal");
    return out;
  }

  for (const auto& f : families) {
    if (f.parameter_space_dim == 0) continue;
    if (f.kind == NeighborType::Type1) {
      for (const auto& p : distinct_lines_in(outside, budget))
        detail::add_unique(out.neighbors, seen, type1_neighbor(x, y, p));
    } else {
      for (const auto& w : distinct_hyperplanes_in(meet, budget))
        detail::add_unique(out.neighbors, seen, type2_neighbor(x, y, w));
    }
    break;
  }
  detail::ensure(out.neighbors.size() >= budget, "count_common_neighbors: witnesses are not distinct");
  return out;
}

/// Some common ortho-neighbour of the adjacent non-compatible pair (X, Y)
/// lying inside `within` (default: the whole space).
inline Subspace common_ortho_neighbor(const Subspace& x, const Subspace& y,
                                      const std::optional<Subspace>& within = std::nullopt) {
  detail::require_adjacent_noncompatible(x, y, "common_ortho_neighbor");
  const Subspace join = sum(x, y);
  const Subspace v = within ? *within : Subspace::full(x.ambient());
  detail::require(v.contains(join), "common_ortho_neighbor: X+Y is not inside the given subspace");
  if (x.dim() > 1) {
    const Subspace meet = intersect(x, y);
    const Subspace w = meet.dim() >= 2 ? distinct_hyperplanes_in(meet, 1).front() : Subspace::zero(x.ambient());
    return type2_neighbor(x, y, w);
  }
  const Subspace room = ortho_within(join, v);
  if (room.dim() == 0)
    throw PreconditionError("common_ortho_neighbor: no common ortho-neighbour exists (k = 1, no room)");
  return type1_neighbor(x, y, line(room.basis().row_vector(0)));
}

// ---------------------------------------------------------------------------
// Compatible pairs at distance 2.

/// The two common ortho-neighbours of X, Y, Z for compatible X, Y with
/// dim(X∩Y) = k-2 and Z ortho-adjacent to both.
inline SubspacePair two_extensions(const Subspace& x, const Subspace& y, const Subspace& z) {
  detail::same_dim(x, y, "two_extensions");
  detail::same_dim(x, z, "two_extensions");
  detail::require(x.dim() >= 2, "two_extensions: need k >= 2");
  detail::require(intersection_dim(x, y) + 2 == x.dim(), "two_extensions: dim(X∩Y) must be k-2");
  detail::require(is_compatible(x, y), "two_extensions: X and Y are not compatible");
  detail::require(detail::common_neighbor_of(z, x, y), "two_extensions: Z is not ortho-adjacent to both X and Y");
  const Subspace w = intersect(x, y);
  detail::require(z.contains(w), "two_extensions: Z does not contain X∩Y");

  const Subspace xp = ortho_within(w, x);
  const Subspace yp = ortho_within(w, y);
  const Subspace p = intersect(z, xp);
  const Subspace q = intersect(z, yp);
  detail::ensure(p.dim() == 1 && q.dim() == 1, "two_extensions: Z meets X' or Y' badly");
  const Subspace pp = ortho_within(p, xp);
  const Subspace qp = ortho_within(q, yp);
  Subspace z1 = sum(sum(pp, w), q);
  Subspace z2 = sum(sum(p, w), qp);
  for (const Subspace* c : {&z1, &z2})
    detail::ensure(detail::common_neighbor_of(*c, x, y) && is_ortho_adjacent(*c, z),
                   "two_extensions: extension fails the triple check");
  detail::ensure(z1 != z2, "two_extensions: extensions coincide");
  return {std::move(z1), std::move(z2)};
}

/// Orthogonal basis of C^n through which X, Y, Z (as in two_extensions) are
/// all spanned by basis subsets.
inline std::vector<Vector> shared_basis(const Subspace& x, const Subspace& y, const Subspace& z,
                                        const std::optional<Subspace>& within = std::nullopt) {
  const Subspace w = intersect(x, y);
  const Subspace xp = ortho_within(w, x);
  const Subspace yp = ortho_within(w, y);
  const Subspace p = intersect(z, xp);
  const Subspace q = intersect(z, yp);
  std::vector<Vector> basis = orthogonal_basis(w);
  for (const Subspace& l : {p, ortho_within(p, xp), q, ortho_within(q, yp)})
    basis.push_back(l.basis().row_vector(0));
  for (auto& v : orthogonal_basis(detail::complement_in(sum(x, y), within))) basis.push_back(std::move(v));
  detail::ensure(basis.size() == detail::ambient_dim(x, within), "shared_basis: wrong size");
  return basis;
}

/// Every k-subspace spanned by the shared basis that is ortho-adjacent to
/// X, Y and Z. Two_extensions predicts exactly its two outputs.
inline std::vector<Subspace> common_neighbors_in_shared_basis(const Subspace& x, const Subspace& y,
                                                              const Subspace& z,
                                                              const std::optional<Subspace>& within = std::nullopt) {
  const auto basis = shared_basis(x, y, z, within);
  const std::size_t k = x.dim();
  std::vector<Subspace> out;
  for (const auto& c : basis_spanned(basis, k)) {
    // Cheap dimension filter before the commutator tests.
    if (intersection_dim(c, x) + 1 != k || intersection_dim(c, y) + 1 != k || intersection_dim(c, z) + 1 != k)
      continue;
    if (detail::common_neighbor_of(c, x, y) && is_ortho_adjacent(c, z)) out.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Adjacent non-compatible pairs with n = k+3.

/// The only common ortho-neighbour of X, Y and the Type1 neighbour Z when
/// n = k+3: Q + (X∩Y) with Q the complement of P = Z ⊖ (X∩Y) in (X+Y)^⊥.
inline Subspace unique_partner(const Subspace& x, const Subspace& y, const Subspace& z,
                               const std::optional<Subspace>& within = std::nullopt) {
  detail::require_adjacent_noncompatible(x, y, "unique_partner");
  detail::same_dim(x, z, "unique_partner");
  detail::require(detail::ambient_dim(x, within) == x.dim() + 3, "unique_partner: need n = k+3");
  detail::require_inside(within, sum(x, y), "unique_partner");
  detail::require_inside(within, z, "unique_partner");
  detail::require(detail::common_neighbor_of(z, x, y), "unique_partner: Z is not ortho-adjacent to both X and Y");
  const Subspace join = sum(x, y);
  detail::require(!join.contains(z), "unique_partner: Z is not a Type1 neighbour");
  const Subspace w = intersect(x, y);
  const Subspace outside = detail::complement_in(join, within);
  const Subspace p = ortho_within(w, z);
  detail::ensure(outside.contains(p), "unique_partner: Z ⊖ (X∩Y) is not orthogonal to X+Y");
  const Subspace q = ortho_within(p, outside);
  Subspace partner = sum(q, w);
  detail::ensure(detail::common_neighbor_of(partner, x, y) && is_ortho_adjacent(partner, z),
                 "unique_partner: partner fails the triple check");

  // Type2 candidates S+W' all meet Z in W' only, so none is adjacent to Z.
  const Subspace s = adjacent_pair_complement(x, y);
  std::vector<Subspace> ws;
  if (w.dim() == 1) {
    ws.push_back(Subspace::zero(x.ambient()));
  } else {
    const auto rows = w.basis_vectors();
    for (std::size_t drop = 0; drop < rows.size(); ++drop) {
      std::vector<Vector> h;
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (r != drop) h.push_back(rows[r]);
      ws.push_back(Subspace::span(h, x.ambient()));
    }
    for (auto& h : distinct_hyperplanes_in(w, 3)) ws.push_back(std::move(h));
  }
  for (const auto& wp : ws)
    detail::ensure(!is_adjacent(sum(s, wp), z), "unique_partner: a Type2 candidate is adjacent to Z");
  return partner;
}

// ---------------------------------------------------------------------------
// Compatibility through geodesics.

/// Outcome of decide_compatibility_by_geodesics: either compatible, or a
/// Grassmann geodesic from X to Y with a step that is not ortho-adjacent.
struct CompatibilityDecision {
  bool compatible = false;
  std::optional<GeodesicPath> witness;
  std::size_t attempts = 0;
};

/// Decides compatibility without the commutator: reduce to X' = X∩V,
/// Y' = Y∩V with V the complement of X∩Y in X+Y; the pair is compatible iff
/// X' ⊥ Y'. Otherwise pick a line P of Y' not orthogonal to X' and a
/// hyperplane N of X' with proj_{X'}(P) ⊄ N; then P+N+(X∩Y) is adjacent to
/// X but not ortho-adjacent, and lies on a geodesic from X to Y.
inline CompatibilityDecision decide_compatibility_by_geodesics(const Subspace& x, const Subspace& y,
                                                               std::size_t budget = kDefaultSearchBudget,
                                                               std::uint64_t seed = 0) {
  detail::same_dim(x, y, "decide_compatibility_by_geodesics");
  detail::require(x != y, "decide_compatibility_by_geodesics: X = Y");
  const bool oracle = is_compatible(x, y);
  const Subspace w = intersect(x, y);
  CompatibilityDecision out;

  if (w.dim() + 1 == x.dim()) {
    if (is_ortho_adjacent(x, y)) {
      detail::ensure(oracle, "decide_compatibility_by_geodesics: ortho-adjacent pair is not compatible");
      out.compatible = true;
      return out;
    }
    out.witness = GeodesicPath::make({x, y}, GraphKind::Grassmann);
    detail::ensure(!oracle, "decide_compatibility_by_geodesics: compatible adjacent pair is not ortho-adjacent");
    return out;
  }

  const Subspace v = ortho_within(w, sum(x, y));
  const Subspace xp = intersect(x, v);
  const Subspace yp = intersect(y, v);
  if (is_orthogonal(xp, yp)) {
    if (!oracle) throw InvariantViolation("decide_compatibility_by_geodesics: X' ⊥ Y' but X, Y are not compatible");
    // Any Grassmann geodesic must then be an ortho-geodesic.
    detail::ensure(build_geodesic(x, y).is_ortho_path(),
                   "decide_compatibility_by_geodesics: geodesic of a compatible pair is not an ortho-path");
    out.compatible = true;
    return out;
  }

  std::optional<Vector> p;
  for (const auto& row : yp.basis_vectors())
    if (!is_orthogonal(line(row), xp)) {
      p = row;
      break;
    }
  detail::ensure(p.has_value(), "decide_compatibility_by_geodesics: no basis row of Y' meets X' obliquely");

  const auto xrows = xp.basis_vectors();
  Rng rng(seed);
  auto try_hyperplane = [&](const std::vector<Vector>& nrows) -> bool {
    ++out.attempts;
    std::vector<Vector> rows = nrows;
    rows.push_back(*p);
    const Subspace z = detail::span_with(w, rows);
    if (z.dim() != x.dim() || !is_adjacent(x, z) || is_ortho_adjacent(x, z)) return false;
    GeodesicPath path = build_geodesic_through(x, z, y);
    detail::ensure(path.first_non_ortho_step().has_value(),
                   "decide_compatibility_by_geodesics: witness path has no bad step");
    out.witness = std::move(path);
    return true;
  };

  for (std::size_t drop = 0; drop < xrows.size() && out.attempts < budget; ++drop) {
    std::vector<Vector> nrows;
    for (std::size_t r = 0; r < xrows.size(); ++r)
      if (r != drop) nrows.push_back(xrows[r]);
    if (try_hyperplane(nrows)) break;
  }
  while (!out.witness && out.attempts < budget) {
    const Subspace h = random_subspace_in(xp, xp.dim() - 1, rng);
    if (try_hyperplane(h.basis_vectors())) break;
  }

  if (!out.witness) {
    if (oracle) throw InvariantViolation("decide_compatibility_by_geodesics: X' and Y' not orthogonal for a compatible pair");
    throw SearchExhausted("decide_compatibility_by_geodesics: no witness within " + std::to_string(budget) +
                          " attempts although X and Y are not compatible");
  }
  detail::ensure(!oracle, "decide_compatibility_by_geodesics: witness found for a compatible pair");
  return out;
}

// ---------------------------------------------------------------------------
// Pairs at ortho-distance 2.

enum class Distance2Case { AdjacentNonCompatible, CompatibleCodim2, NonCompatibleCodim2 };

inline const char* to_string(Distance2Case c) {
  switch (c) {
    case Distance2Case::AdjacentNonCompatible: return "AdjacentNonCompatible";
    case Distance2Case::CompatibleCodim2: return "CompatibleCodim2";
    case Distance2Case::NonCompatibleCodim2: return "NonCompatibleCodim2";
  }
  return "?";
}

/// How many of something were found: an exact small count, or "many"
/// (at least the witness budget, pairwise distinct, from an infinite family).
enum class Multiplicity { Zero, One, Two, Many };

inline const char* to_string(Multiplicity m) {
  switch (m) {
    case Multiplicity::Zero: return "zero";
    case Multiplicity::One: return "one";
    case Multiplicity::Two: return "two";
    case Multiplicity::Many: return "many";
  }
  return "?";
}

inline Multiplicity multiplicity_of(std::size_t count) {
  switch (count) {
    case 0: return Multiplicity::Zero;
    case 1: return Multiplicity::One;
    case 2: return Multiplicity::Two;
    default: return Multiplicity::Many;
  }
}

/// Number of common ortho-neighbours Z of X, Y, and for each of them the
/// number of Z' ortho-adjacent to X, Y, Z.
struct GeodesicProfile {
  Multiplicity middles = Multiplicity::Zero;
  Multiplicity extensions = Multiplicity::Zero;

  friend bool operator==(const GeodesicProfile&, const GeodesicProfile&) = default;
};

struct Distance2Classification {
  Distance2Case direct;
  GeodesicProfile profile;
  /// Case implied by the profile alone, when the profile determines it.
  std::optional<Distance2Case> from_profile;
  std::vector<Subspace> middles;
  std::vector<Subspace> extensions;
};

namespace detail {

/// Case implied by a profile. For 4 <= 2k' <= n (k' = min(k, n-k)) with
/// k' <= n-3 the profile separates the three cases; for n = 2k = 4 it does not.
inline std::optional<Distance2Case> case_from_profile(const GeodesicProfile& pr, std::size_t n, std::size_t k) {
  const std::size_t kk = std::min(k, n - k);
  if (kk + 2 >= n) return std::nullopt;
  // No Z' at all rules out both other cases.
  if (pr.extensions == Multiplicity::Zero && pr.middles != Multiplicity::Zero) return Distance2Case::NonCompatibleCodim2;
  if (pr.middles != Multiplicity::Many) return std::nullopt;
  if (kk + 4 <= n && pr.extensions == Multiplicity::Many) return Distance2Case::AdjacentNonCompatible;
  if (kk + 3 == n && pr.extensions == Multiplicity::One) return Distance2Case::AdjacentNonCompatible;
  if (pr.extensions == Multiplicity::Two) return Distance2Case::CompatibleCodim2;
  return std::nullopt;
}

inline std::vector<Subspace> complements(std::vector<Subspace> xs, const std::optional<Subspace>& within) {
  for (auto& x : xs) x = complement_in(x, within);
  return xs;
}

}  // namespace detail

/// Classifies a pair at ortho-distance 2 directly from the predicates and,
/// independently, from the measured geodesic profile; throws on
/// disagreement. For a non-compatible pair with dim(X∩Y) = k-2 a common
/// ortho-neighbour must be supplied, since none can be constructed in
/// general. With `within` = V the pair is classified in the Grassmannian of V.
inline Distance2Classification classify_distance2(const Subspace& x, const Subspace& y,
                                                  std::size_t budget = kDefaultWitnessBudget,
                                                  const std::optional<Subspace>& witness = std::nullopt,
                                                  const std::optional<Subspace>& within = std::nullopt) {
  detail::same_dim(x, y, "classify_distance2");
  detail::require(x != y, "classify_distance2: X = Y");
  detail::require(!is_ortho_adjacent(x, y), "classify_distance2: X and Y are ortho-adjacent");
  detail::require(budget >= 3, "classify_distance2: budget must be at least 3");
  detail::require_inside(within, sum(x, y), "classify_distance2");
  if (witness) detail::require_inside(within, *witness, "classify_distance2");
  const std::size_t n = detail::ambient_dim(x, within), k = x.dim();
  const std::size_t m = intersection_dim(x, y);
  detail::require(m + 2 >= k, "classify_distance2: Grassmann distance exceeds 2");

  Distance2Classification out{};
  const bool compatible = is_compatible(x, y);
  if (m + 1 == k)
    out.direct = Distance2Case::AdjacentNonCompatible;
  else
    out.direct = compatible ? Distance2Case::CompatibleCodim2 : Distance2Case::NonCompatibleCodim2;

  // The orthocomplement map is an isomorphism onto the (n-k)-graph; work on
  // the side with 2k <= n.
  const bool flip = 2 * k > n;
  const Subspace a = flip ? detail::complement_in(x, within) : x;
  const Subspace b = flip ? detail::complement_in(y, within) : y;
  const std::size_t kk = a.dim();

  std::vector<Subspace> middles, extensions;
  switch (out.direct) {
    case Distance2Case::AdjacentNonCompatible: {
      const CommonNeighborCount cn = count_common_neighbors(a, b, budget, within);
      if (cn.exact) {
        middles = cn.neighbors;
        // Every common neighbour is in the list; count Z' among them.
        for (const auto& z2 : middles)
          if (is_ortho_adjacent(z2, middles.front())) extensions.push_back(z2);
        break;
      }
      // With 2k <= n and infinitely many middles, (X+Y)^⊥ has dim >= 2.
      const Subspace meet = intersect(a, b);
      const Subspace outside = detail::complement_in(sum(a, b), within);
      detail::ensure(outside.dim() >= 2, "classify_distance2: unexpected regime");
      for (const auto& p : distinct_lines_in(outside, budget)) middles.push_back(type1_neighbor(a, b, p));
      // Z' ortho-adjacent to X, Y, Z = (X∩Y)+P: Type2 candidates meet Z in
      // dim k-2, so Z' = (X∩Y)+Q with Q ⊥ P inside (X+Y)^⊥.
      const Subspace room = ortho_within(ortho_within(meet, middles.front()), outside);
      if (room.dim() >= 2) {
        for (const auto& q : distinct_lines_in(room, budget)) extensions.push_back(type1_neighbor(a, b, q));
      } else {
        extensions.push_back(unique_partner(a, b, middles.front(), within));
      }
      for (const auto& z2 : extensions)
        detail::ensure(is_ortho_adjacent(z2, middles.front()), "classify_distance2: extension is not ortho-adjacent to Z");
      break;
    }
    case Distance2Case::CompatibleCodim2: {
      const Subspace w = intersect(a, b);
      const Subspace ap = ortho_within(w, a);
      const Subspace bp = ortho_within(w, b);
      const Vector q = bp.basis().row_vector(0);
      for (const auto& p : distinct_lines_in(ap, budget))
        middles.push_back(detail::span_with(w, {p.basis().row_vector(0), q}));
      for (const auto& z : middles)
        detail::ensure(detail::common_neighbor_of(z, a, b), "classify_distance2: constructed middle is not a common neighbour");
      const auto [z1, z2] = two_extensions(a, b, middles.front());
      const auto found = common_neighbors_in_shared_basis(a, b, middles.front(), within);
      detail::ensure(found.size() == 2, "classify_distance2: shared-basis universe has a third extension");
      extensions = {z1, z2};
      break;
    }
    case Distance2Case::NonCompatibleCodim2: {
      if (!witness) throw PreconditionError("classify_distance2: a common ortho-neighbour witness is required");
      const Subspace z = flip ? detail::complement_in(*witness, within) : *witness;
      if (!detail::common_neighbor_of(z, a, b))
        throw PreconditionError("classify_distance2: witness is not ortho-adjacent to both X and Y");
      middles.push_back(z);
      // The analogues of the two extensions; by the witness lemma neither
      // may be ortho-adjacent to X, Y and Z.
      const Subspace w = intersect(a, b);
      const Subspace v = ortho_within(w, sum(a, b));
      const Subspace ap = intersect(a, v), bp = intersect(b, v);
      const Subspace p = intersect(z, ap), q = intersect(z, bp);
      if (p.dim() == 1 && q.dim() == 1) {
        for (const Subspace& c : {sum(sum(ortho_within(p, ap), w), q), sum(sum(p, w), ortho_within(q, bp))})
          if (c.dim() == kk && detail::common_neighbor_of(c, a, b) && is_ortho_adjacent(c, z))
            extensions.push_back(c);
      }
      detail::ensure(extensions.empty(), "classify_distance2: non-compatible pair has ortho-adjacent middles");
      break;
    }
  }

  out.profile.middles = multiplicity_of(middles.size());
  out.profile.extensions = multiplicity_of(extensions.size());
  out.from_profile = detail::case_from_profile(out.profile, n, k);
  if (out.from_profile && *out.from_profile != out.direct)
    throw InvariantViolation(std::string("classify_distance2: predicates say ") + to_string(out.direct) +
                             " but the geodesic profile says " + to_string(*out.from_profile));
  if (kk + 3 <= n)
    detail::ensure(out.from_profile.has_value(), "classify_distance2: profile does not determine the case");

  out.middles = flip ? detail::complements(std::move(middles), within) : std::move(middles);
  out.extensions = flip ? detail::complements(std::move(extensions), within) : std::move(extensions);
  return out;
}

// ---------------------------------------------------------------------------
// Maximal cliques from an orthogonal basis.

namespace detail {

inline void require_orthogonal_basis(const std::vector<Vector>& basis, std::size_t n, const char* op) {
  if (basis.size() != n) throw PreconditionError(std::string(op) + ": basis must have n vectors");
  for (std::size_t i = 0; i < n; ++i) {
    if (basis[i].size() != n) throw ShapeError(std::string(op) + ": basis vector has wrong length");
    if (inner(basis[i], basis[i]).is_zero()) throw PreconditionError(std::string(op) + ": zero basis vector");
    for (std::size_t j = i + 1; j < n; ++j)
      if (!inner(basis[i], basis[j]).is_zero())
        throw PreconditionError(std::string(op) + ": basis is not orthogonal");
  }
}

/// Indices of basis vectors lying in s; throws unless they span s.
inline std::vector<std::size_t> basis_indices_in(const Subspace& s, const std::vector<Vector>& basis, const char* op) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (s.contains(basis[i])) idx.push_back(i);
  if (idx.size() != s.dim()) throw PreconditionError(std::string(op) + ": subspace is not spanned by basis vectors");
  return idx;
}

inline void ensure_clique(const std::vector<Subspace>& c, const char* op) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      ensure(is_ortho_adjacent(c[i], c[j]), std::string(op) + ": elements are not pairwise ortho-adjacent");
}

}  // namespace detail

/// S + b for every basis vector b outside S: n-k+1 elements, k = dim S + 1.
inline std::vector<Subspace> ortho_star_elements(const Subspace& s, const std::vector<Vector>& basis) {
  const std::size_t n = s.ambient();
  detail::require_orthogonal_basis(basis, n, "ortho_star_elements");
  detail::require(s.dim() < n, "ortho_star_elements: need dim S < n");
  const auto inside = detail::basis_indices_in(s, basis, "ortho_star_elements");
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!s.contains(basis[i])) out.push_back(detail::span_with(s, {basis[i]}));
  detail::ensure(out.size() == n - inside.size(), "ortho_star_elements: wrong size");
  detail::ensure_clique(out, "ortho_star_elements");
  return out;
}

/// Spans of all k-subsets of the basis vectors in U: k+1 elements, k = dim U - 1.
inline std::vector<Subspace> ortho_top_elements(const Subspace& u, const std::vector<Vector>& basis) {
  const std::size_t n = u.ambient();
  detail::require_orthogonal_basis(basis, n, "ortho_top_elements");
  detail::require(u.dim() >= 2, "ortho_top_elements: need dim U >= 2");
  const auto inside = detail::basis_indices_in(u, basis, "ortho_top_elements");
  std::vector<Subspace> out;
  for (std::size_t drop = 0; drop < inside.size(); ++drop) {
    std::vector<std::size_t> idx;
    for (std::size_t r = 0; r < inside.size(); ++r)
      if (r != drop) idx.push_back(inside[r]);
    out.push_back(span_of(basis, idx, n));
  }
  detail::ensure(out.size() == u.dim(), "ortho_top_elements: wrong size");
  detail::ensure_clique(out, "ortho_top_elements");
  return out;
}

inline std::size_t clique_intersection_size(const std::vector<Subspace>& c1, const std::vector<Subspace>& c2) {
  std::set<std::string> keys;
  for (const auto& x : c1) keys.insert(x.key());
  std::size_t count = 0;
  std::set<std::string> counted;
  for (const auto& y : c2)
    if (keys.count(y.key()) && counted.insert(y.key()).second) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// Connectivity.

/// A walk from X to Y in the ortho-Grassmann graph: a Grassmann geodesic
/// whose non-ortho steps are bridged by a common ortho-neighbour.
inline std::vector<Subspace> ortho_walk(const Subspace& x, const Subspace& y) {
  detail::same_dim(x, y, "ortho_walk");
  if (x == y) return {x};
  const GeodesicPath g = build_geodesic(x, y);
  std::vector<Subspace> walk{x};
  for (std::size_t i = 0; i + 1 < g.vertices().size(); ++i) {
    const Subspace& a = g.vertices()[i];
    const Subspace& b = g.vertices()[i + 1];
    if (!is_ortho_adjacent(a, b)) walk.push_back(common_ortho_neighbor(a, b));
    walk.push_back(b);
  }
  for (std::size_t i = 0; i + 1 < walk.size(); ++i)
    detail::ensure(is_ortho_adjacent(walk[i], walk[i + 1]), "ortho_walk: step is not ortho-adjacent");
  return walk;
}

}  // namespace ogl

#endif  // OGL_ORTHOGRAPH_HPP
