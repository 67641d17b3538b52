// Copyright 2026 The ogl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGL_CONJCLASS_HPP
#define OGL_CONJCLASS_HPP

// Self-adjoint operators with a fixed spectrum and fixed multiplicities,
// stored as labelled orthogonal eigenspace decompositions of C^n. Indices of
// eigenvalues are 0-based throughout.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <memory>
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

/// Distinct rational eigenvalues a_0..a_{k-1} with multiplicities n_0..n_{k-1}.
class SpectralData {
 public:
  SpectralData() = default;

  static SpectralData make(std::vector<mpq_class> eigenvalues, std::vector<std::size_t> multiplicities) {
    detail::require(!eigenvalues.empty(), "SpectralData: no eigenvalues");
    detail::require(eigenvalues.size() == multiplicities.size(),
                    "SpectralData: eigenvalue and multiplicity lists differ in length");
    for (auto& a : eigenvalues) a.canonicalize();
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
      detail::require(multiplicities[i] >= 1, "SpectralData: multiplicities must be positive");
      for (std::size_t j = 0; j < i; ++j)
        detail::require(eigenvalues[i] != eigenvalues[j], "SpectralData: eigenvalues must be distinct");
    }
    SpectralData s;
    s.eigenvalues_ = std::move(eigenvalues);
    s.multiplicities_ = std::move(multiplicities);
    return s;
  }

  const std::vector<mpq_class>& eigenvalues() const { return eigenvalues_; }
  const std::vector<std::size_t>& multiplicities() const { return multiplicities_; }
  std::size_t size() const { return eigenvalues_.size(); }
  std::size_t ambient() const {
    std::size_t n = 0;
    for (auto m : multiplicities_) n += m;
    return n;
  }

  std::string to_string() const {
    std::string s = "sigma={";
    for (std::size_t i = 0; i < size(); ++i) s += (i ? "," : "") + eigenvalues_[i].get_str();
    s += "} d={";
    for (std::size_t i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(multiplicities_[i]);
    return s + "}";
  }

  friend bool operator==(const SpectralData& a, const SpectralData& b) {
    return a.eigenvalues_ == b.eigenvalues_ && a.multiplicities_ == b.multiplicities_;
  }
  friend bool operator!=(const SpectralData& a, const SpectralData& b) { return !(a == b); }

 private:
  std::vector<mpq_class> eigenvalues_;
  std::vector<std::size_t> multiplicities_;
};

/// sum_i a_i P_{X_i} with X_i pairwise orthogonal, dim X_i = n_i, and
/// sum X_i = C^n. The matrix is built once at construction.
class SelfAdjointOperator {
 public:
  static SelfAdjointOperator make(SpectralData spectral, std::vector<Subspace> eigenspaces) {
    const std::size_t k = spectral.size(), n = spectral.ambient();
    detail::require(eigenspaces.size() == k, "SelfAdjointOperator: need one eigenspace per eigenvalue");
    for (std::size_t i = 0; i < k; ++i) {
      detail::require(eigenspaces[i].ambient() == n, "SelfAdjointOperator: eigenspace lives in the wrong ambient space");
      detail::require(eigenspaces[i].dim() == spectral.multiplicities()[i],
                      "SelfAdjointOperator: eigenspace " + std::to_string(i) + " has the wrong dimension");
      for (std::size_t j = 0; j < i; ++j)
        detail::require(is_orthogonal(eigenspaces[i], eigenspaces[j]),
                        "SelfAdjointOperator: eigenspaces " + std::to_string(j) + " and " + std::to_string(i) +
                            " are not orthogonal");
    }
    // Orthogonal with dimensions summing to n, so they span C^n.
    SelfAdjointOperator a;
    a.spectral_ = std::move(spectral);
    a.eigenspaces_ = std::move(eigenspaces);
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < k; ++i)
      m = add(m, scale(Scalar(a.spectral_.eigenvalues()[i]), a.eigenspaces_[i].projection()));
    detail::ensure(is_self_adjoint(m), "SelfAdjointOperator: matrix is not self-adjoint");
    a.matrix_ = std::make_shared<const ExactMatrix>(std::move(m));
    return a;
  }

  const SpectralData& spectral() const { return spectral_; }
  const std::vector<Subspace>& eigenspaces() const { return eigenspaces_; }
  const Subspace& eigenspace(std::size_t i) const { return eigenspaces_.at(i); }
  std::size_t ambient() const { return spectral_.ambient(); }
  const ExactMatrix& matrix() const { return *matrix_; }

  std::string key() const {
    std::string s = spectral_.to_string();
    for (const auto& x : eigenspaces_) s += "|" + x.key();
    return s;
  }

  friend bool operator==(const SelfAdjointOperator& a, const SelfAdjointOperator& b) {
    return a.spectral_ == b.spectral_ && a.eigenspaces_ == b.eigenspaces_;
  }
  friend bool operator!=(const SelfAdjointOperator& a, const SelfAdjointOperator& b) { return !(a == b); }

 private:
  SpectralData spectral_;
  std::vector<Subspace> eigenspaces_;
  std::shared_ptr<const ExactMatrix> matrix_;
};

using OperatorPair = std::pair<SelfAdjointOperator, SelfAdjointOperator>;
using IndexPair = std::pair<std::size_t, std::size_t>;

inline const ExactMatrix& to_matrix(const SelfAdjointOperator& a) { return a.matrix(); }

/// A permutation δ of the eigenvalue indices with n_{δ(i)} = n_i.
class DeltaPermutation {
 public:
  static DeltaPermutation make(std::vector<std::size_t> mapping, const SpectralData& spectral) {
    detail::require(mapping.size() == spectral.size(), "DeltaPermutation: wrong length");
    std::vector<bool> hit(mapping.size(), false);
    for (std::size_t i = 0; i < mapping.size(); ++i) {
      detail::require(mapping[i] < mapping.size() && !hit[mapping[i]], "DeltaPermutation: not a permutation");
      hit[mapping[i]] = true;
      detail::require(spectral.multiplicities()[mapping[i]] == spectral.multiplicities()[i],
                      "DeltaPermutation: maps between different multiplicities");
    }
    DeltaPermutation d;
    d.mapping_ = std::move(mapping);
    return d;
  }

  std::size_t operator()(std::size_t i) const { return mapping_.at(i); }
  std::size_t inverse(std::size_t j) const {
    return static_cast<std::size_t>(std::find(mapping_.begin(), mapping_.end(), j) - mapping_.begin());
  }
  const std::vector<std::size_t>& mapping() const { return mapping_; }

 private:
  std::vector<std::size_t> mapping_;
};

/// δ(A) = sum a_i P_{X_δ(i)}.
inline SelfAdjointOperator permute(const SelfAdjointOperator& a, const DeltaPermutation& delta) {
  detail::require(delta.mapping().size() == a.spectral().size(), "permute: permutation has the wrong length");
  std::vector<Subspace> es;
  for (std::size_t i = 0; i < a.spectral().size(); ++i) {
    detail::require(a.spectral().multiplicities()[delta(i)] == a.spectral().multiplicities()[i],
                    "permute: multiplicity mismatch");
    es.push_back(a.eigenspace(delta(i)));
  }
  return SelfAdjointOperator::make(a.spectral(), std::move(es));
}

/// Same eigenspaces, eigenvalues replaced by `sigma_prime`.
inline SelfAdjointOperator spectrum_swap(const SelfAdjointOperator& a, std::vector<mpq_class> sigma_prime) {
  detail::require(sigma_prime.size() == a.spectral().size(), "spectrum_swap: wrong number of eigenvalues");
  return SelfAdjointOperator::make(SpectralData::make(std::move(sigma_prime), a.spectral().multiplicities()),
                                   a.eigenspaces());
}

namespace detail {

inline void same_spectral(const SelfAdjointOperator& a, const SelfAdjointOperator& b, const char* op) {
  if (a.spectral() != b.spectral())
    throw PreconditionError(std::string(op) + ": operators have different spectral data");
}

inline std::vector<std::size_t> differing_indices(const SelfAdjointOperator& a, const SelfAdjointOperator& b) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < a.spectral().size(); ++t)
    if (a.eigenspace(t) != b.eigenspace(t)) out.push_back(t);
  return out;
}

inline bool invariant_under(const Subspace& s, const ExactMatrix& m) {
  for (std::size_t r = 0; r < s.dim(); ++r)
    if (!s.contains(matvec(m, s.basis().row_vector(r)))) return false;
  return true;
}

/// rank(A-B) = 2 and both kernel and image of A-B are invariant under A and B.
inline bool operator_level_adjacent(const SelfAdjointOperator& a, const SelfAdjointOperator& b) {
  const ExactMatrix d = sub(a.matrix(), b.matrix());
  if (rank(d) != 2) return false;
  const Subspace image = Subspace::from_rows(transpose(d));
  const Subspace kernel = Subspace::from_rows(kernel_basis(d));
  for (const ExactMatrix* m : {&a.matrix(), &b.matrix()})
    if (!invariant_under(image, *m) || !invariant_under(kernel, *m)) return false;
  return true;
}

/// Exactly two eigenspaces differ, and they are adjacent.
inline std::optional<IndexPair> eigenspace_level_type(const SelfAdjointOperator& a, const SelfAdjointOperator& b) {
  const auto diff = differing_indices(a, b);
  if (diff.size() != 2) return std::nullopt;
  if (!is_adjacent(a.eigenspace(diff[0]), b.eigenspace(diff[0]))) return std::nullopt;
  return IndexPair{diff[0], diff[1]};
}

}  // namespace detail

/// The (i, j) with i < j for which A and B are (i,j)-adjacent, if any.
/// Computed at operator level and at eigenspace level; throws if they disagree.
inline std::optional<IndexPair> adjacency_type(const SelfAdjointOperator& a, const SelfAdjointOperator& b) {
  detail::same_spectral(a, b, "adjacency_type");
  const bool op_level = detail::operator_level_adjacent(a, b);
  const auto es_level = detail::eigenspace_level_type(a, b);
  if (op_level != es_level.has_value())
    throw InvariantViolation(std::string("adjacency_type: operator-level test says ") +
                             (op_level ? "adjacent" : "not adjacent") + ", eigenspace-level test disagrees");
  return es_level;
}

inline bool is_adjacent_ops(const SelfAdjointOperator& a, const SelfAdjointOperator& b) {
  return adjacency_type(a, b).has_value();
}

inline bool operators_commute(const SelfAdjointOperator& a, const SelfAdjointOperator& b) {
  return matmul(a.matrix(), b.matrix()) == matmul(b.matrix(), a.matrix());
}

/// AB = BA and rank(A-B) = 2; cross-checked against (i,j)-adjacency with
/// X_i ortho-adjacent to Y_i.
inline bool is_commutatively_adjacent(const SelfAdjointOperator& a, const SelfAdjointOperator& b) {
  detail::same_spectral(a, b, "is_commutatively_adjacent");
  const bool op_level = operators_commute(a, b) && rank(sub(a.matrix(), b.matrix())) == 2;
  const auto type = adjacency_type(a, b);
  const bool es_level = type && is_ortho_adjacent(a.eigenspace(type->first), b.eigenspace(type->first));
  detail::ensure(op_level == es_level, "is_commutatively_adjacent: operator-level and eigenspace-level tests disagree");
  return op_level;
}

/// Replaces the eigenspaces at i and j.
inline SelfAdjointOperator with_eigenspaces(const SelfAdjointOperator& a, std::size_t i, Subspace xi, std::size_t j,
                                            Subspace xj) {
  std::vector<Subspace> es = a.eigenspaces();
  es.at(i) = std::move(xi);
  es.at(j) = std::move(xj);
  return SelfAdjointOperator::make(a.spectral(), std::move(es));
}

/// C commutatively adjacent to both of the non-commuting (i,j)-adjacent A, B:
/// Z_i is a common ortho-neighbour of X_i and Y_i inside V = X_i + X_j and
/// Z_j its complement in V.
inline SelfAdjointOperator midpoint(const SelfAdjointOperator& a, const SelfAdjointOperator& b) {
  detail::same_spectral(a, b, "midpoint");
  const auto type = adjacency_type(a, b);
  detail::require(type.has_value(), "midpoint: operators are not adjacent");
  detail::require(!operators_commute(a, b), "midpoint: operators commute");
  const auto [i, j] = *type;
  const Subspace v = sum(a.eigenspace(i), a.eigenspace(j));
  detail::ensure(v == sum(b.eigenspace(i), b.eigenspace(j)), "midpoint: X_i + X_j differs from Y_i + Y_j");
  Subspace zi;
  try {
    zi = common_ortho_neighbor(a.eigenspace(i), b.eigenspace(i), v);
  } catch (const PreconditionError& e) {
    throw SearchExhausted(std::string("midpoint: no common ortho-neighbour inside X_i + X_j (") + e.what() + ")");
  }
  SelfAdjointOperator c = with_eigenspaces(a, i, zi, j, ortho_within(zi, v));
  detail::ensure(is_commutatively_adjacent(c, a) && is_commutatively_adjacent(c, b),
                 "midpoint: result is not commutatively adjacent to both inputs");
  return c;
}

// ---------------------------------------------------------------------------
// Pairs differing in three or four eigenspaces.

/// Every C commutatively adjacent to both A and B, for A, B whose
/// eigenspaces differ in exactly 3 or 4 indices. C differs from each in two
/// indices, so on the differing set it copies B on some pair and A on the
/// rest (4 indices), or copies A at r, B at p and fills the last slot with
/// the complement (3 indices). At most 6 candidates either way.
inline std::vector<SelfAdjointOperator> enumerate_common_comm_neighbors(const SelfAdjointOperator& a,
                                                                        const SelfAdjointOperator& b) {
  detail::same_spectral(a, b, "enumerate_common_comm_neighbors");
  const auto diff = detail::differing_indices(a, b);
  detail::require(diff.size() == 3 || diff.size() == 4,
                  "enumerate_common_comm_neighbors: eigenspaces must differ in exactly 3 or 4 indices");
  const std::size_t n = a.ambient();
  std::vector<std::vector<Subspace>> candidates;
  if (diff.size() == 4) {
    for (const auto& pick : k_subsets(4, 2)) {
      std::vector<Subspace> es = a.eigenspaces();
      for (auto p : pick) es[diff[p]] = b.eigenspace(diff[p]);
      candidates.push_back(std::move(es));
    }
  } else {
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t p = 0; p < 3; ++p) {
        if (p == r) continue;
        const std::size_t q = 3 - r - p;
        std::vector<Subspace> es = a.eigenspaces();
        es[diff[p]] = b.eigenspace(diff[p]);
        // The forced slot needs X_r ⊥ Y_p; otherwise there is no candidate.
        if (!is_orthogonal(es[diff[r]], es[diff[p]])) continue;
        Subspace rest = Subspace::zero(n);
        for (std::size_t t = 0; t < es.size(); ++t)
          if (t != diff[q]) rest = sum(rest, es[t]);
        es[diff[q]] = orthocomplement(rest);
        candidates.push_back(std::move(es));
      }
  }
  std::vector<SelfAdjointOperator> out;
  std::set<std::string> seen;
  for (auto& es : candidates) {
    // Mixing eigenspaces of A and B need not give an orthogonal decomposition.
    bool valid = true;
    for (std::size_t t = 0; t < es.size() && valid; ++t) {
      valid = es[t].dim() == a.spectral().multiplicities()[t];
      for (std::size_t u = 0; u < t && valid; ++u) valid = is_orthogonal(es[t], es[u]);
    }
    if (!valid) continue;
    SelfAdjointOperator c = SelfAdjointOperator::make(a.spectral(), std::move(es));
    if (!seen.insert(c.key()).second) continue;
    if (is_commutatively_adjacent(c, a) && is_commutatively_adjacent(c, b)) out.push_back(std::move(c));
  }
  detail::ensure(out.size() <= 6, "enumerate_common_comm_neighbors: more than six common neighbours");
  return out;
}

struct OpsDistance2Classification {
  std::vector<std::size_t> differing;
  /// Adjacent and not commuting, from the operator predicates.
  bool adjacent_noncommuting = false;
  /// Two differing indices: the subspace classification inside X_i + X_j.
  std::optional<Distance2Classification> reduced;
  GeodesicProfile profile;
  /// Common commutative neighbours found (a sample when there are infinitely many).
  std::vector<SelfAdjointOperator> middles;
};

/// Classifies A, B at distance 2 in the commutative-adjacency graph. With
/// two differing indices i, j the eigenspaces X_i, Y_i are classified in the
/// Grassmannian of V = X_i + X_j; a common neighbour `witness` is needed
/// when they are non-compatible with dim(X_i∩Y_i) = n_i - 2.
inline OpsDistance2Classification classify_distance2_ops(const SelfAdjointOperator& a, const SelfAdjointOperator& b,
                                                         std::size_t witness_budget = kDefaultWitnessBudget,
                                                         const std::optional<SelfAdjointOperator>& witness = std::nullopt) {
  detail::same_spectral(a, b, "classify_distance2_ops");
  detail::require(a != b, "classify_distance2_ops: A = B");
  detail::require(!is_commutatively_adjacent(a, b), "classify_distance2_ops: A and B are commutatively adjacent");
  if (witness) detail::same_spectral(a, *witness, "classify_distance2_ops");

  OpsDistance2Classification out;
  out.differing = detail::differing_indices(a, b);
  out.adjacent_noncommuting = is_adjacent_ops(a, b) && !operators_commute(a, b);

  if (out.differing.size() == 2) {
    const std::size_t i = out.differing[0], j = out.differing[1];
    const Subspace v = sum(a.eigenspace(i), a.eigenspace(j));
    std::optional<Subspace> z;
    if (witness) {
      detail::require(is_commutatively_adjacent(*witness, a) && is_commutatively_adjacent(*witness, b),
                      "classify_distance2_ops: witness is not a common commutative neighbour");
      z = witness->eigenspace(i);
    }
    Distance2Classification r = classify_distance2(a.eigenspace(i), b.eigenspace(i), witness_budget, z, v);
    detail::ensure((r.direct == Distance2Case::AdjacentNonCompatible) == out.adjacent_noncommuting,
                   "classify_distance2_ops: subspace classification disagrees with the operator predicates");
    for (const auto& zi : r.middles) {
      SelfAdjointOperator c = with_eigenspaces(a, i, zi, j, ortho_within(zi, v));
      detail::ensure(is_commutatively_adjacent(c, a) && is_commutatively_adjacent(c, b),
                     "classify_distance2_ops: lifted middle is not a common commutative neighbour");
      out.middles.push_back(std::move(c));
    }
    out.profile = r.profile;
    out.reduced = std::move(r);
    return out;
  }

  detail::require(out.differing.size() == 3 || out.differing.size() == 4,
                  "classify_distance2_ops: eigenspaces differ in more than 4 indices");
  detail::ensure(!out.adjacent_noncommuting, "classify_distance2_ops: operators differing in 3+ indices are adjacent");
  out.middles = enumerate_common_comm_neighbors(a, b);
  if (out.middles.empty())
    throw PreconditionError("classify_distance2_ops: no common commutative neighbour, distance exceeds 2");
  std::size_t ext = 0;
  for (std::size_t t = 1; t < out.middles.size(); ++t) ext += is_commutatively_adjacent(out.middles[t], out.middles[0]);
  out.profile = {multiplicity_of(out.middles.size()), multiplicity_of(ext)};
  return out;
}

// ---------------------------------------------------------------------------
// Generators.

/// Eigenspaces are consecutive blocks of a random orthogonal basis.
inline SelfAdjointOperator random_operator(const SpectralData& spectral, Rng& rng) {
  const std::size_t n = spectral.ambient();
  const auto basis = random_orthogonal_basis(n, rng);
  std::vector<Subspace> es;
  std::size_t next = 0;
  for (auto m : spectral.multiplicities()) {
    std::vector<std::size_t> idx;
    for (std::size_t t = 0; t < m; ++t) idx.push_back(next++);
    es.push_back(span_of(basis, idx, n));
  }
  return SelfAdjointOperator::make(spectral, std::move(es));
}

/// (i,j)-adjacent neighbour of A: Y_i = H + L with H a random hyperplane of
/// X_i and L a line of X_i + X_j. With `commuting`, L ⊂ X_j, otherwise L has
/// nonzero parts in X_i ⊖ H and in X_j.
inline SelfAdjointOperator adjacent_operator(const SelfAdjointOperator& a, std::size_t i, std::size_t j,
                                             bool commuting, Rng& rng) {
  detail::require(i != j && i < a.spectral().size() && j < a.spectral().size(), "adjacent_operator: bad indices");
  const Subspace& xi = a.eigenspace(i);
  const Subspace& xj = a.eigenspace(j);
  const Subspace v = sum(xi, xj);
  const Subspace h = random_subspace_in(xi, xi.dim() - 1, rng);
  Vector l = random_vector_in(xj, rng);
  if (!commuting) {
    const Vector p = random_vector_in(ortho_within(h, xi), rng);
    for (std::size_t t = 0; t < l.size(); ++t) l[t] += p[t];
  }
  const Subspace yi = detail::span_with(h, {l});
  return with_eigenspaces(a, i, yi, j, ortho_within(yi, v));
}

/// Random redecomposition of the eigenspaces at `indices` inside their sum.
/// Generically every listed eigenspace changes.
inline SelfAdjointOperator scramble_operator(const SelfAdjointOperator& a, const std::vector<std::size_t>& indices,
                                             Rng& rng) {
  Subspace v = Subspace::zero(a.ambient());
  for (auto t : indices) v = sum(v, a.eigenspace(t));
  const auto basis = random_orthogonal_basis_in(v, rng);
  std::vector<Subspace> es = a.eigenspaces();
  std::size_t next = 0;
  for (auto t : indices) {
    std::vector<std::size_t> idx;
    for (std::size_t r = 0; r < a.spectral().multiplicities()[t]; ++r) idx.push_back(next++);
    es[t] = span_of(basis, idx, a.ambient());
  }
  return SelfAdjointOperator::make(a.spectral(), std::move(es));
}

/// B at commutative distance 2 from A whose eigenspaces differ from A's in
/// exactly `differing` (3 or 4) indices, reached through a commutative
/// neighbour C. Returns (A, B, C).
struct OperatorTriple {
  SelfAdjointOperator a, b, c;
};

inline OperatorTriple comm_distance2_pair(const SpectralData& spectral, std::size_t differing, Rng& rng) {
  const std::size_t k = spectral.size();
  detail::require((differing == 3 && k >= 3) || (differing == 4 && k >= 4),
                  "comm_distance2_pair: need 3 or 4 differing indices and enough eigenvalues");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    SelfAdjointOperator a = random_operator(spectral, rng);
    std::vector<std::size_t> perm(k);
    for (std::size_t t = 0; t < k; ++t) perm[t] = t;
    for (std::size_t t = k; t > 1; --t) std::swap(perm[t - 1], perm[rng.below(t)]);
    const std::size_t s1 = perm[0], s2 = perm[1], s3 = perm[2];
    const std::size_t s4 = differing == 4 ? perm[3] : perm[1];
    SelfAdjointOperator c = adjacent_operator(a, s1, s2, true, rng);
    SelfAdjointOperator b = adjacent_operator(c, s4, s3, true, rng);
    if (detail::differing_indices(a, b).size() == differing) return {std::move(a), std::move(b), std::move(c)};
  }
  throw SearchExhausted("comm_distance2_pair: rejection sampling gave up");
}

// ---------------------------------------------------------------------------
// Finite universes of operators.

/// Every operator whose eigenspaces are spanned by subsets of `basis`.
inline std::vector<SelfAdjointOperator> basis_operators(const SpectralData& spectral, const std::vector<Vector>& basis) {
  const std::size_t n = spectral.ambient();
  detail::require(basis.size() == n, "basis_operators: basis size differs from ambient dimension");
  std::vector<std::size_t> label;
  for (std::size_t t = 0; t < spectral.size(); ++t) label.insert(label.end(), spectral.multiplicities()[t], t);
  std::vector<SelfAdjointOperator> out;
  do {
    std::vector<std::vector<std::size_t>> idx(spectral.size());
    for (std::size_t r = 0; r < n; ++r) idx[label[r]].push_back(r);
    std::vector<Subspace> es;
    for (const auto& ix : idx) es.push_back(span_of(basis, ix, n));
    out.push_back(SelfAdjointOperator::make(spectral, std::move(es)));
  } while (std::next_permutation(label.begin(), label.end()));
  return out;
}

/// Number of connected components under commutative adjacency.
inline std::size_t comm_components(const std::vector<SelfAdjointOperator>& ops) {
  std::vector<int> comp(ops.size(), -1);
  std::size_t count = 0;
  for (std::size_t s = 0; s < ops.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::deque<std::size_t> queue{s};
    comp[s] = static_cast<int>(count);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < ops.size(); ++w)
        if (comp[w] < 0 && is_commutatively_adjacent(ops[v], ops[w])) {
          comp[w] = static_cast<int>(count);
          queue.push_back(w);
        }
    }
    ++count;
  }
  return count;
}

}  // namespace ogl

#endif  // OGL_CONJCLASS_HPP
