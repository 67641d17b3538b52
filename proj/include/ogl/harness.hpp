// Copyright 2026 The ogl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGL_HARNESS_HPP
#define OGL_HARNESS_HPP

// Seeded verification campaigns. Each registered lemma has a trial body that
// builds an instance from the trial seed, runs the library operation, and
// checks its claims against an independent route. Reports are JSON and are
// byte-identical for the same campaign apart from the wall-time field.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ogl/conjclass.hpp"
#include "ogl/dim4.hpp"
#include "ogl/grassmann.hpp"
#include "ogl/io.hpp"
#include "ogl/orthograph.hpp"

namespace ogl::harness {

using io::Json;

/// Bad lemma id, parameters or fixture name.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Pairs sampled per family in the exceptional-map lemma.
inline constexpr std::size_t kPairsPerFamily = 200;

struct Campaign {
  std::string lemma_id;
  std::optional<std::size_t> n, k;
  std::optional<std::vector<mpq_class>> sigma;
  std::optional<std::vector<std::size_t>> d;
  std::size_t trials = 0;  // 0: the lemma default
  std::size_t witness_budget = kDefaultWitnessBudget;
  std::uint64_t seed = 0;
  /// Record inputs and witnesses of passing trials too (failing ones always).
  bool inline_inputs = false;
};

/// State of one running trial. Checks that fail are collected, not thrown.
class TrialContext {
 public:
  TrialContext(const Campaign& c, std::size_t index)
      : campaign(c), index(index), seed(derive_seed(c.seed, index)), rng(seed) {}

  const Campaign& campaign;
  const std::size_t index;
  const std::uint64_t seed;
  Rng rng;
  Json counts = Json::object();
  Json inputs = Json::object();
  Json witnesses = Json::object();
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }

  std::size_t n() const { return *campaign.n; }
  std::size_t k() const { return *campaign.k; }
  SpectralData spectral() const { return SpectralData::make(*campaign.sigma, *campaign.d); }
};

struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  bool pass = false;
  Json counts, inputs, witnesses;
  std::vector<std::string> failures;
  /// Type name and message of an exception that ended the trial.
  std::optional<std::pair<std::string, std::string>> error;
};

struct VerificationReport {
  Campaign campaign;  // with defaults filled in
  std::string claim;
  std::string command;
  std::vector<TrialRecord> trials;
  std::size_t passed = 0, failed = 0;
  double wall_time_seconds = 0;

  bool pass() const { return failed == 0; }
};

enum class ParamKind { Subspaces, Operators, Fixed };

struct Lemma {
  std::string id;
  /// One-sentence statement of what the trials check.
  std::string claim;
  ParamKind params;
  Campaign defaults;
  /// When false, n and k may be left unset (chosen per trial).
  bool requires_nk = true;
  std::function<void(const Campaign&)> validate;
  std::function<void(TrialContext&)> trial;
};

namespace detail {

using ogl::detail::require;

inline void usage(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

inline std::string error_type_name(const std::exception& e) {
  if (dynamic_cast<const io::DocumentError*>(&e)) return "DocumentError";
  if (dynamic_cast<const DivisionByZero*>(&e)) return "DivisionByZero";
  if (dynamic_cast<const ShapeError*>(&e)) return "ShapeError";
  if (dynamic_cast<const PreconditionError*>(&e)) return "PreconditionError";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const SearchExhausted*>(&e)) return "SearchExhausted";
  if (dynamic_cast<const InvariantViolation*>(&e)) return "InvariantViolation";
  if (dynamic_cast<const OutOfField*>(&e)) return "OutOfField";
  if (dynamic_cast<const Error*>(&e)) return "Error";
  return "std::exception";
}

inline std::vector<std::size_t> shuffled(std::size_t n, Rng& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

inline std::vector<std::size_t> slice(const std::vector<std::size_t>& v, std::size_t from, std::size_t to) {
  return {v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to)};
}

inline std::vector<Vector> standard_basis(std::size_t n) {
  std::vector<Vector> e(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
  return e;
}

inline bool pairwise_ortho_adjacent(const std::vector<Subspace>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!is_ortho_adjacent(c[i], c[j])) return false;
  return true;
}

/// Orthogonality read off the reduced bases, not from projections.
inline bool orthogonal_by_inner_products(const Subspace& x, const Subspace& y) {
  for (const auto& a : x.basis_vectors())
    for (const auto& b : y.basis_vectors())
      if (!inner(a, b).is_zero()) return false;
  return true;
}

inline std::set<std::string> keys_of(const std::vector<Subspace>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(x.key());
  return out;
}

/// Index pair (i, j), i != j, with n_i + n_j >= 3 when one exists.
inline IndexPair roomy_pair(const SpectralData& s, Rng& rng) {
  std::vector<IndexPair> roomy, all;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (i == j) continue;
      all.emplace_back(i, j);
      if (s.multiplicities()[i] + s.multiplicities()[j] >= 3) roomy.emplace_back(i, j);
    }
  const auto& from = roomy.empty() ? all : roomy;
  return from[rng.below(from.size())];
}

inline std::vector<mpq_class> squares_spectrum(std::size_t k) {
  std::vector<mpq_class> out;
  for (std::size_t i = 1; i <= k; ++i) out.emplace_back(static_cast<unsigned long>(i * i));
  return out;
}

inline Json index_pair_json(const std::optional<IndexPair>& p) {
  if (!p) return nullptr;
  return Json::array({p->first, p->second});
}

// ---------------------------------------------------------------------------
// Parameter checks.

inline void only_subspace_params(const Campaign& c) {
  usage(!c.sigma && !c.d, c.lemma_id + ": takes --n/--k, not --sigma/--d");
}

inline void only_operator_params(const Campaign& c) {
  usage(!c.n && !c.k, c.lemma_id + ": takes --sigma/--d, not --n/--k");
  usage(c.sigma && c.d, c.lemma_id + ": needs both --sigma and --d");
  usage(c.sigma->size() == c.d->size(), c.lemma_id + ": --sigma and --d differ in length");
  try {
    SpectralData::make(*c.sigma, *c.d);
  } catch (const Error& e) {
    throw UsageError(c.lemma_id + ": " + e.what());
  }
}

inline void nk_range(const Campaign& c, std::size_t k_min, std::size_t extra_min, std::size_t n_max) {
  const std::size_t n = *c.n, k = *c.k;
  usage(k >= k_min, c.lemma_id + ": need k >= " + std::to_string(k_min));
  usage(n >= k + extra_min, c.lemma_id + ": need n >= k+" + std::to_string(extra_min));
  usage(n <= n_max, c.lemma_id + ": need n <= " + std::to_string(n_max));
}

inline void fixed_c4(const Campaign& c) {
  usage(!c.sigma && !c.d, c.lemma_id + ": takes no --sigma/--d");
  usage(*c.n == 4 && *c.k == 2, c.lemma_id + ": only defined for n=4, k=2");
}

inline void ambient_at_most(const Campaign& c, std::size_t n_max, std::size_t min_eigenvalues) {
  std::size_t n = 0;
  for (auto m : *c.d) n += m;
  usage(n <= n_max, c.lemma_id + ": need sum of multiplicities <= " + std::to_string(n_max));
  usage(c.d->size() >= min_eigenvalues,
        c.lemma_id + ": need at least " + std::to_string(min_eigenvalues) + " eigenvalues");
}

// ---------------------------------------------------------------------------
// Trial bodies.

inline void trial_common_neighbors(TrialContext& t) {
  const std::size_t n = t.n(), k = t.k();
  const auto [x, y] = adjacent_noncompatible_pair(n, k, t.rng);
  t.inputs = {{"X", io::to_json(x)}, {"Y", io::to_json(y)}};
  // Parameter spaces: lines of (X+Y)^⊥ (dim n-k-1) and (k-2)-subspaces of X∩Y (dim k-1).
  const std::size_t outside = n - k - 1;
  const bool has_type1 = outside >= 1, has_type2 = k >= 2;
  const auto families = common_neighbor_families(x, y);
  std::size_t seen1 = 0, seen2 = 0;
  for (const auto& f : families) {
    if (f.kind == NeighborType::Type1) {
      ++seen1;
      t.check(f.parameter_space_dim == outside - 1, "Type1 family has the wrong parameter dimension");
    } else {
      ++seen2;
      t.check(f.parameter_space_dim == k - 2, "Type2 family has the wrong parameter dimension");
    }
  }
  t.check(seen1 == (has_type1 ? 1u : 0u) && seen2 == (has_type2 ? 1u : 0u), "unexpected set of families");

  const auto count = count_common_neighbors(x, y, t.campaign.witness_budget);
  const bool exact = outside <= 1 && k <= 2;
  t.check(count.exact == exact, "finite/infinite verdict disagrees with the parameter dimensions");
  if (exact)
    t.check(count.neighbors.size() == (has_type1 ? 1u : 0u) + (has_type2 ? 1u : 0u), "wrong number of neighbours");
  else
    t.check(count.neighbors.size() >= t.campaign.witness_budget, "fewer witnesses than the budget");
  t.check(keys_of(count.neighbors).size() == count.neighbors.size(), "witnesses repeat");
  std::size_t t1 = 0, t2 = 0;
  for (const auto& z : count.neighbors) {
    t.check(is_ortho_adjacent(z, x) && is_ortho_adjacent(z, y), "witness is not a common ortho-neighbour");
    (classify_common_neighbor(x, y, z) == NeighborType::Type1 ? t1 : t2) += 1;
  }
  t.check(t1 == 0 || has_type1, "Type1 witness without a Type1 family");
  t.check(t2 == 0 || has_type2, "Type2 witness without a Type2 family");
  t.counts = {{"exact", count.exact}, {"neighbors", count.neighbors.size()}, {"type1", t1}, {"type2", t2}};
  Json ws = Json::array();
  for (const auto& z : count.neighbors) ws.push_back(io::to_json(z));
  t.witnesses = {{"neighbors", std::move(ws)}};
}

inline void trial_two_extensions(TrialContext& t) {
  const std::size_t n = t.n(), k = t.k();
  const auto [x, y] = compatible_codim2_pair(n, k, t.rng);
  const Subspace w = intersect(x, y);
  const Subspace p = random_line_in(ortho_within(w, x), t.rng);
  const Subspace q = random_line_in(ortho_within(w, y), t.rng);
  const Subspace z = sum(sum(w, p), q);
  t.inputs = {{"X", io::to_json(x)}, {"Y", io::to_json(y)}, {"Z", io::to_json(z)}};
  t.check(is_ortho_adjacent(z, x) && is_ortho_adjacent(z, y), "seeded Z is not a common ortho-neighbour");

  const auto [e1, e2] = two_extensions(x, y, z);
  for (const Subspace* e : {&e1, &e2})
    t.check(is_ortho_adjacent(*e, x) && is_ortho_adjacent(*e, y) && is_ortho_adjacent(*e, z),
            "extension fails the triple check");
  t.check(e1 != e2, "extensions coincide");
  const auto exhaustive = common_neighbors_in_shared_basis(x, y, z);
  t.check(keys_of(exhaustive) == keys_of({e1, e2}), "shared-basis exhaustion disagrees with the construction");
  t.counts = {{"extensions", 2}, {"exhaustive", exhaustive.size()}};
  t.witnesses = {{"extensions", Json::array({io::to_json(e1), io::to_json(e2)})}};
}

inline void trial_unique_partner(TrialContext& t) {
  const std::size_t n = t.n(), k = t.k();
  const auto [x, y] = adjacent_noncompatible_pair(n, k, t.rng);
  const Subspace meet = intersect(x, y);
  const Subspace outside = orthocomplement(sum(x, y));
  const Subspace p = random_line_in(outside, t.rng);
  const Subspace z = type1_neighbor(x, y, p);
  t.inputs = {{"X", io::to_json(x)}, {"Y", io::to_json(y)}, {"Z", io::to_json(z)}};

  const Subspace partner = unique_partner(x, y, z);
  t.check(is_ortho_adjacent(partner, x) && is_ortho_adjacent(partner, y) && is_ortho_adjacent(partner, z),
          "partner fails the triple check");
  // Any common neighbour of X, Y, Z is (X∩Y) + P' with P' ⊥ P inside the plane (X+Y)^⊥.
  t.check(partner == sum(meet, ortho_within(p, outside)), "partner differs from the complement construction");

  const Subspace w = random_subspace_in(meet, k - 2, t.rng);
  const Subspace type2 = type2_neighbor(x, y, w);
  t.check(is_ortho_adjacent(type2, x) && is_ortho_adjacent(type2, y), "Type2 candidate is not a common neighbour");
  t.check(!is_adjacent(type2, z), "Type2 candidate is adjacent to Z");
  t.counts = {{"partners", 1}, {"type2_adjacent_to_z", is_adjacent(type2, z)}};
  t.witnesses = {{"partner", io::to_json(partner)}, {"type2", io::to_json(type2)}};
}

inline void trial_geodesic_count_dim4(TrialContext& t) {
  const auto [x, y] = adjacent_noncompatible_pair(4, 2, t.rng);
  t.inputs = {{"X", io::to_json(x)}, {"Y", io::to_json(y)}};
  const auto count = count_common_neighbors(x, y, t.campaign.witness_budget);
  const Multiplicity m = count.exact ? multiplicity_of(count.neighbors.size()) : Multiplicity::Many;
  t.check(m == Multiplicity::Two, std::string("expected exactly two common neighbours, got ") + to_string(m));
  bool orthogonal = false;
  if (count.neighbors.size() == 2) {
    const Subspace& a = count.neighbors[0];
    const Subspace& b = count.neighbors[1];
    orthogonal = orthogonal_by_inner_products(a, b);
    t.check(orthogonal, "the two neighbours are not orthogonal");
    t.check(is_orthogonal(a, b) == orthogonal, "projection and inner-product orthogonality disagree");
    for (const Subspace& z : count.neighbors) GeodesicPath::make({x, z, y}, GraphKind::Ortho);
  }
  t.counts = {{"middles", to_string(m)}, {"orthogonal", orthogonal}};
  Json ws = Json::array();
  for (const auto& z : count.neighbors) ws.push_back(io::to_json(z));
  t.witnesses = {{"neighbors", std::move(ws)}};
}

inline void trial_compat_geodesics(TrialContext& t) {
  std::size_t n, k;
  if (t.campaign.n) {
    n = t.n();
    k = t.k();
  } else {
    n = 3 + t.rng.below(6);
    k = 1 + t.rng.below(n - 1);
  }
  const std::size_t lo = 2 * k > n ? 2 * k - n : 0;
  const std::size_t m = lo + t.rng.below(k - lo);
  const bool compatible = t.index % 2 == 0;
  const auto [x, y] = pair_with_intersection(n, k, m, compatible, t.rng);
  t.inputs = {{"X", io::to_json(x)}, {"Y", io::to_json(y)}};

  const auto dec = decide_compatibility_by_geodesics(x, y, kDefaultSearchBudget, t.seed);
  t.check(dec.compatible == is_compatible(x, y), "geodesic decision disagrees with the commutator");
  t.check(dec.compatible == compatible, "geodesic decision disagrees with the construction");
  std::size_t length = 0;
  if (dec.compatible) {
    t.check(!dec.witness.has_value(), "compatible verdict carries a witness");
  } else if (!dec.witness) {
    t.check(false, "non-compatible verdict without a witness");
  } else {
    const GeodesicPath& g = *dec.witness;
    length = g.length();
    t.check(g.kind() == GraphKind::Grassmann && g.front() == x && g.back() == y, "witness has the wrong endpoints");
    t.check(length == k - m, "witness length is not k - dim(X∩Y)");
    t.check(g.first_non_ortho_step().has_value(), "witness has no non-ortho-adjacent step");
    GeodesicPath::make(g.vertices(), GraphKind::Grassmann);
    Json vs = Json::array();
    for (const auto& v : g.vertices()) vs.push_back(io::to_json(v));
    t.witnesses = {{"path", std::move(vs)}};
  }
  t.counts = {{"n", n}, {"k", k}, {"m", m}, {"compatible", dec.compatible}, {"witness_length", length},
              {"attempts", dec.attempts}};
}

inline void trial_clique_sizes(TrialContext& t) {
  const std::size_t n = t.n(), k = t.k();
  const auto basis = random_orthogonal_basis(n, t.rng);
  const auto perm = shuffled(n, t.rng);
  const Subspace s = span_of(basis, slice(perm, 0, k - 1), n);
  const Subspace u = span_of(basis, slice(perm, 0, k + 1), n);
  const auto star = ortho_star_elements(s, basis);
  const auto top = ortho_top_elements(u, basis);
  t.check(star.size() == n - k + 1, "ortho-star has the wrong size");
  t.check(top.size() == k + 1, "ortho-top has the wrong size");
  t.check(pairwise_ortho_adjacent(star), "ortho-star is not a clique");
  t.check(pairwise_ortho_adjacent(top), "ortho-top is not a clique");
  // Independent route: filter all basis-spanned k-subspaces.
  std::vector<Subspace> star_filter, top_filter;
  for (const auto& c : basis_spanned(basis, k)) {
    if (c.contains(s)) star_filter.push_back(c);
    if (u.contains(c)) top_filter.push_back(c);
  }
  t.check(keys_of(star) == keys_of(star_filter), "ortho-star differs from the filtered universe");
  t.check(keys_of(top) == keys_of(top_filter), "ortho-top differs from the filtered universe");
  t.counts = {{"star", star.size()}, {"top", top.size()}};
}

inline void trial_clique_intersections(TrialContext& t) {
  const std::size_t n = t.n(), k = t.k();
  const auto basis = random_orthogonal_basis(n, t.rng);
  const auto perm = shuffled(n, t.rng);
  const auto a_idx = slice(perm, 0, k - 1);
  const Subspace s = span_of(basis, a_idx, n);
  const auto star = ortho_star_elements(s, basis);

  // Same S, second basis mixing c = n-k+1-m of the vectors outside S.
  const std::size_t target_same = t.index % 3 % (n - k);
  const std::size_t c = n - k + 1 - target_same;
  const auto mixed_same = mix_orthogonal_block(basis, slice(perm, k - 1, k - 1 + c));
  const std::size_t same = clique_intersection_size(star, ortho_star_elements(s, mixed_same));
  t.check(same == target_same, "same-S ortho-star intersection differs from the construction");

  // Distinct S: sharing k-2 basis vectors gives one common element; a
  // second basis mixed outside S' gives none.
  const bool share = t.index % 2 == 0;
  auto b_idx = slice(perm, 0, k - 2);
  b_idx.push_back(perm[k - 1]);
  const Subspace s2 = span_of(basis, b_idx, n);
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(b_idx.begin(), b_idx.end(), i) == b_idx.end()) rest.push_back(i);
  const auto basis2 = share ? basis : mix_orthogonal_block(basis, rest);
  const std::size_t distinct = clique_intersection_size(star, ortho_star_elements(s2, basis2));
  t.check(distinct <= 1, "distinct-S ortho-stars share more than one element");
  t.check(distinct == (share ? 1u : 0u), "distinct-S intersection differs from the construction");

  // Star against the top of U = S + u1 + u2.
  const std::size_t target_top = t.index % 3;
  auto u_idx = a_idx;
  u_idx.push_back(perm[k - 1]);
  u_idx.push_back(perm[k]);
  const Subspace u = span_of(basis, u_idx, n);
  std::vector<Vector> top_basis = basis;
  if (target_top == 1) top_basis = mix_orthogonal_block(basis, {perm[0], perm[k - 1]});
  if (target_top == 0) top_basis = mix_orthogonal_block(basis, {perm[k - 1], perm[k]});
  const std::size_t star_top = clique_intersection_size(star, ortho_top_elements(u, top_basis));
  t.check(star_top <= 2, "ortho-star and ortho-top share more than two elements");
  t.check(star_top == target_top, "star/top intersection differs from the construction");
  t.counts = {{"star_star_same", same}, {"star_star_distinct", distinct}, {"star_top", star_top}};
}

inline void trial_distance_formula(TrialContext& t) {
  const std::size_t n = t.n(), k = t.k();
  const auto basis = t.index == 0 ? standard_basis(n) : random_orthogonal_basis(n, t.rng);
  std::size_t pairs = 0;
  for (GraphKind kind : {GraphKind::Grassmann, GraphKind::Ortho}) {
    const FiniteUniverse u = basis_universe(basis, k, kind);
    const std::size_t v = u.size();
    std::vector<std::vector<std::size_t>> adj(v);
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = i + 1; j < v; ++j)
        if (u.has_edge(i, j)) {
          adj[i].push_back(j);
          adj[j].push_back(i);
        }
    for (std::size_t src = 0; src < v; ++src) {
      std::vector<std::size_t> dist(v, SIZE_MAX);
      std::deque<std::size_t> queue{src};
      dist[src] = 0;
      while (!queue.empty()) {
        const std::size_t a = queue.front();
        queue.pop_front();
        for (auto b : adj[a])
          if (dist[b] == SIZE_MAX) {
            dist[b] = dist[a] + 1;
            queue.push_back(b);
          }
      }
      for (std::size_t dst = src + 1; dst < v; ++dst) {
        const std::size_t expect = k - intersection_dim(u.vertices()[src], u.vertices()[dst]);
        t.check(dist[dst] == expect, std::string(to_string(kind)) + " distance differs from k - dim(X∩Y) for pair " +
                                         std::to_string(src) + "," + std::to_string(dst));
        ++pairs;
      }
    }
    // Spot check of the library BFS on one pair.
    const std::size_t i = t.rng.below(v), j = t.rng.below(v);
    const auto lib = bfs_distance(u, u.vertices()[i], u.vertices()[j]);
    t.check(lib && *lib == k - intersection_dim(u.vertices()[i], u.vertices()[j]), "library BFS disagrees");
  }
  t.counts = {{"vertices", k_subsets(n, k).size()}, {"pairs", pairs}};
}

inline void trial_dim4_exceptional(TrialContext& t) {
  const PerpClosedFamily fam = random_perp_closed_family(1 + t.rng.below(3), t.rng);
  const ExceptionalMap f = exceptional_map(fam);
  const auto pairs = mixed_pairs_c4(fam, kPairsPerFamily, t.rng);
  t.inputs = {{"family", io::to_json(fam)}};
  const AutomorphismReport r = check_ortho_automorphism(f, pairs);
  t.check(r.pairs_checked == kPairsPerFamily, "not every pair was checked");
  t.check(r.violations.empty(), std::to_string(r.violations.size()) + " ortho-adjacency violations");
  t.check(r.involution_failures.empty(), "the map is not an involution");
  std::size_t edges = 0;
  for (const auto& [x, y] : pairs) edges += is_ortho_adjacent(x, y);
  const auto [bx, by] = find_adjacency_breaking_pair(f);
  t.check(is_adjacent(bx, by) != is_adjacent(f(bx), f(by)), "breaking pair does not change adjacency");
  t.counts = {{"family_size", fam.size()}, {"pairs", r.pairs_checked}, {"ortho_edges", edges},
              {"violations", r.violations.size()}, {"breaking_pair_found", true}};
  t.witnesses = {{"breaking_pair", Json::array({io::to_json(bx), io::to_json(by)})}};
}

inline void trial_dim4_orthogonality(TrialContext& t) {
  static constexpr AnglePattern kPatterns[] = {AnglePattern::Orthogonal, AnglePattern::Isoclinic,
                                               AnglePattern::Distinct, AnglePattern::OneRightAngle};
  const AnglePattern pattern = kPatterns[t.index % 4];
  const auto [x, y] = disjoint_pair_c4(pattern, t.rng);
  t.inputs = {{"X", io::to_json(x)}, {"Y", io::to_json(y)}};
  const bool by_graph = orthogonality_by_ortho_adjacency(x, y, 2);
  const bool by_inner = orthogonal_by_inner_products(x, y);
  t.check(by_graph == by_inner, "graph characterisation disagrees with inner products");
  t.check(by_inner == (pattern == AnglePattern::Orthogonal), "construction and inner products disagree");
  t.counts = {{"pattern", static_cast<int>(t.index % 4)}, {"orthogonal", by_graph}};
}

inline void trial_ops_adjacency_equiv(TrialContext& t) {
  const SpectralData spectral = t.spectral();
  const std::size_t m = spectral.size();
  const SelfAdjointOperator a = random_operator(spectral, t.rng);
  const std::size_t kind = t.index % 5;
  std::optional<IndexPair> planted;
  SelfAdjointOperator b = a;
  if (kind <= 1) {
    auto [i, j] = roomy_pair(spectral, t.rng);
    b = adjacent_operator(a, i, j, kind == 0, t.rng);
    planted = IndexPair{std::min(i, j), std::max(i, j)};
  } else if (kind <= m) {
    const auto perm = shuffled(m, t.rng);
    b = scramble_operator(a, slice(perm, 0, kind), t.rng);
  } else {
    b = random_operator(spectral, t.rng);
  }
  t.inputs = {{"A", io::to_json(a)}, {"B", io::to_json(b)}};
  const bool operator_level = ogl::detail::operator_level_adjacent(a, b);
  const auto eigenspace_level = ogl::detail::eigenspace_level_type(a, b);
  t.check(operator_level == eigenspace_level.has_value(), "operator-level and eigenspace-level adjacency disagree");
  const bool commutative = is_commutatively_adjacent(a, b);
  if (planted) {
    t.check(eigenspace_level == planted, "planted adjacency type not recovered");
    t.check(commutative == (kind == 0), "commutative adjacency differs from the construction");
  }
  t.counts = {{"kind", kind},
              {"differing", ogl::detail::differing_indices(a, b).size()},
              {"operator_level", operator_level},
              {"eigenspace_level", index_pair_json(eigenspace_level)},
              {"commutative", commutative}};
}

inline void trial_ops_six_bound(TrialContext& t) {
  const SpectralData spectral = t.spectral();
  const std::size_t differing = spectral.size() >= 4 && t.index % 2 == 1 ? 4 : 3;
  const OperatorTriple tr = comm_distance2_pair(spectral, differing, t.rng);
  t.inputs = {{"A", io::to_json(tr.a)}, {"B", io::to_json(tr.b)}, {"C", io::to_json(tr.c)}};
  t.check(!is_commutatively_adjacent(tr.a, tr.b), "pair is commutatively adjacent");
  const auto found = enumerate_common_comm_neighbors(tr.a, tr.b);
  t.check(found.size() <= 6, "more than six common commutative neighbours");
  bool has_seed = false;
  for (const auto& c : found) {
    t.check(is_commutatively_adjacent(c, tr.a) && is_commutatively_adjacent(c, tr.b),
            "enumerated operator is not commutatively adjacent to both");
    has_seed = has_seed || c == tr.c;
  }
  t.check(has_seed, "the seeded common neighbour was not enumerated");
  t.counts = {{"differing", differing}, {"neighbors", found.size()}};
}

inline void trial_ops_connectivity(TrialContext& t) {
  const SpectralData spectral = t.spectral();
  const std::size_t n = spectral.ambient();
  const auto basis = random_orthogonal_basis(n, t.rng);
  const auto ops = basis_operators(spectral, basis);
  mpz_class expected = 1;
  for (std::size_t i = 2; i <= n; ++i) expected *= static_cast<unsigned long>(i);
  for (auto m : spectral.multiplicities())
    for (std::size_t i = 2; i <= m; ++i) expected /= static_cast<unsigned long>(i);
  t.check(mpz_class(static_cast<unsigned long>(ops.size())) == expected, "wrong number of basis operators");
  const std::size_t components = comm_components(ops);
  t.check(components == 1, "basis operators are not connected");

  // Adjacent non-commuting pairs are joined through a common commutative neighbour.
  bool bridged = false;
  const auto [i, j] = roomy_pair(spectral, t.rng);
  if (spectral.multiplicities()[i] + spectral.multiplicities()[j] >= 3) {
    const SelfAdjointOperator& a = ops[t.rng.below(ops.size())];
    const SelfAdjointOperator b = adjacent_operator(a, i, j, false, t.rng);
    const SelfAdjointOperator c = midpoint(a, b);
    bridged = is_commutatively_adjacent(c, a) && is_commutatively_adjacent(c, b);
    t.check(bridged, "midpoint is not commutatively adjacent to both");
  }
  t.counts = {{"operators", ops.size()}, {"components", components}, {"bridged", bridged}};
}

inline void trial_spectrum_swap(TrialContext& t) {
  const SpectralData spectral = t.spectral();
  const auto sigma_prime = squares_spectrum(spectral.size());
  const SelfAdjointOperator a = random_operator(spectral, t.rng);
  const std::size_t kind = t.index % 3;
  SelfAdjointOperator b = a;
  if (kind <= 1) {
    const auto [i, j] = roomy_pair(spectral, t.rng);
    b = adjacent_operator(a, i, j, kind == 0, t.rng);
  } else {
    b = scramble_operator(a, slice(shuffled(spectral.size(), t.rng), 0, 2), t.rng);
  }
  t.inputs = {{"A", io::to_json(a)}, {"B", io::to_json(b)}};
  const SelfAdjointOperator as = spectrum_swap(a, sigma_prime), bs = spectrum_swap(b, sigma_prime);
  t.check(as.eigenspaces() == a.eigenspaces() && bs.eigenspaces() == b.eigenspaces(), "swap moved eigenspaces");
  const auto type = adjacency_type(a, b), type_s = adjacency_type(as, bs);
  const bool comm = is_commutatively_adjacent(a, b), comm_s = is_commutatively_adjacent(as, bs);
  t.check(type == type_s, "adjacency not preserved by the swap");
  t.check(comm == comm_s, "commutative adjacency not preserved by the swap");
  bool midpoint_ok = false;
  const bool noncommuting = type.has_value() && !operators_commute(a, b);
  if (noncommuting) {
    const SelfAdjointOperator c = midpoint(a, b);
    const SelfAdjointOperator cs = spectrum_swap(c, sigma_prime);
    midpoint_ok = is_commutatively_adjacent(c, a) && is_commutatively_adjacent(c, b) &&
                  is_commutatively_adjacent(cs, as) && is_commutatively_adjacent(cs, bs);
    t.check(midpoint_ok, "midpoint fails the commutative adjacency checks");
    t.witnesses = {{"midpoint", io::to_json(c)}};
  }
  t.counts = {{"kind", kind}, {"adjacency_type", index_pair_json(type)}, {"commutative", comm},
              {"noncommuting_adjacent", noncommuting}, {"midpoint_verified", midpoint_ok}};
}

inline Campaign subspace_defaults(std::size_t n, std::size_t k, std::size_t trials) {
  Campaign c;
  c.n = n;
  c.k = k;
  c.trials = trials;
  return c;
}

inline Campaign operator_defaults(std::vector<mpq_class> sigma, std::vector<std::size_t> d, std::size_t trials) {
  Campaign c;
  c.sigma = std::move(sigma);
  c.d = std::move(d);
  c.trials = trials;
  return c;
}

inline std::vector<Lemma> build_registry() {
  using P = ParamKind;
  std::vector<Lemma> r;
  r.push_back({"common-neighbors",
               "Common ortho-neighbours of an adjacent non-compatible pair are (X∩Y)+P with P a line outside X+Y, "
               "or S+W with W a hyperplane of X∩Y; there are finitely many only in tiny dimensions (two for n=2k=4).",
               P::Subspaces, subspace_defaults(5, 2, 50), true,
               [](const Campaign& c) {
                 only_subspace_params(c);
                 nk_range(c, 1, 1, 10);
               },
               trial_common_neighbors});
  r.push_back({"two-extensions",
               "For compatible X, Y with dim(X∩Y)=k-2 and a common ortho-neighbour Z, exactly two k-subspaces are "
               "ortho-adjacent to all of X, Y, Z.",
               P::Subspaces, subspace_defaults(6, 3, 50), true,
               [](const Campaign& c) {
                 only_subspace_params(c);
                 nk_range(c, 2, 2, 10);
               },
               trial_two_extensions});
  r.push_back({"unique-partner",
               "When n=k+3, an adjacent non-compatible pair and a common neighbour (X∩Y)+P admit exactly one further "
               "common ortho-neighbour; the S+W candidates are not adjacent to Z.",
               P::Subspaces, subspace_defaults(5, 2, 50), true,
               [](const Campaign& c) {
                 only_subspace_params(c);
                 nk_range(c, 2, 3, 11);
                 usage(*c.n == *c.k + 3, c.lemma_id + ": only defined for n = k+3");
               },
               trial_unique_partner});
  r.push_back({"geodesic-count-dim4",
               "In C^4 with k=2, an adjacent non-compatible pair has exactly two common ortho-neighbours, and they "
               "are orthogonal.",
               P::Fixed, subspace_defaults(4, 2, 100), true, fixed_c4, trial_geodesic_count_dim4});
  r.push_back({"compat-geodesics",
               "X and Y are compatible exactly when every Grassmann geodesic between them uses only ortho-adjacent "
               "steps; otherwise a geodesic with a non-ortho-adjacent step can be exhibited.",
               P::Subspaces, [] {
                 Campaign c;
                 c.trials = 100;
                 return c;
               }(),
               false,
               [](const Campaign& c) {
                 only_subspace_params(c);
                 usage(c.n.has_value() == c.k.has_value(), c.lemma_id + ": give both --n and --k or neither");
                 if (c.n) {
                   nk_range(c, 1, 1, 8);
                 }
               },
               trial_compat_geodesics});
  r.push_back({"clique-sizes",
               "An ortho-star has n-k+1 elements and an ortho-top has k+1, and both are cliques of the ortho graph.",
               P::Subspaces, subspace_defaults(6, 3, 20), true,
               [](const Campaign& c) {
                 only_subspace_params(c);
                 nk_range(c, 1, 1, 10);
               },
               trial_clique_sizes});
  r.push_back({"clique-intersections",
               "Ortho-stars with the same S can meet in any number of elements below n-k; ortho-stars with "
               "different S share at most one element, and an ortho-star and an ortho-top at most two.",
               P::Subspaces, subspace_defaults(6, 3, 30), true,
               [](const Campaign& c) {
                 only_subspace_params(c);
                 nk_range(c, 2, 3, 10);
               },
               trial_clique_intersections});
  r.push_back({"distance-formula",
               "In the Grassmann graph the distance between X and Y is k - dim(X∩Y); the same holds in the ortho "
               "graph for subspaces spanned by one orthogonal basis.",
               P::Subspaces, subspace_defaults(6, 3, 1), true,
               [](const Campaign& c) {
                 only_subspace_params(c);
                 nk_range(c, 1, 1, 6);
               },
               trial_distance_formula});
  r.push_back({"dim4-exceptional",
               "In C^4 with k=2, swapping X and X^⊥ on a family closed under ⊥ preserves ortho-adjacency in both "
               "directions but does not preserve adjacency.",
               P::Fixed, subspace_defaults(4, 2, 10), true, fixed_c4, trial_dim4_exceptional});
  r.push_back({"dim4-orthogonality",
               "In C^4 with k=2, orthogonality of disjoint planes can be read off the ortho graph: their common "
               "ortho-neighbours all have two further common neighbours exactly when the planes are orthogonal.",
               P::Fixed, subspace_defaults(4, 2, 20), true, fixed_c4, trial_dim4_orthogonality});
  r.push_back({"ops-adjacency-equiv",
               "Two operators in one conjugacy class have rank(A-B)=2 with the image and kernel of A-B reducing both, "
               "exactly when their eigenspaces agree except at two indices where they are adjacent.",
               P::Operators, operator_defaults({0, 1, 2}, {3, 3, 2}, 50), true,
               [](const Campaign& c) {
                 only_operator_params(c);
                 ambient_at_most(c, 10, 2);
               },
               trial_ops_adjacency_equiv});
  r.push_back({"ops-six-bound",
               "Two operators at commutative distance 2 whose eigenspaces differ in three or four indices have at "
               "most six common commutative neighbours.",
               P::Operators, operator_defaults({0, 1, 2}, {3, 3, 2}, 30), true,
               [](const Campaign& c) {
                 only_operator_params(c);
                 ambient_at_most(c, 10, 3);
               },
               trial_ops_six_bound});
  r.push_back({"ops-connectivity",
               "The commutative adjacency graph of a conjugacy class is connected, and adjacent non-commuting "
               "operators share a common commutative neighbour.",
               P::Operators, operator_defaults({0, 1, 2}, {2, 1, 1}, 10), true,
               [](const Campaign& c) {
                 only_operator_params(c);
                 ambient_at_most(c, 6, 2);
               },
               trial_ops_connectivity});
  r.push_back({"spectrum-swap",
               "Relabelling the eigenvalues while keeping the eigenspaces preserves adjacency and commutative "
               "adjacency between conjugacy classes with equal multiplicities.",
               P::Operators, operator_defaults({0, 1, 2}, {3, 3, 2}, 30), true,
               [](const Campaign& c) {
                 only_operator_params(c);
                 ambient_at_most(c, 10, 2);
               },
               trial_spectrum_swap});
  return r;
}

}  // namespace detail

inline const std::vector<Lemma>& lemma_registry() {
  static const std::vector<Lemma> registry = detail::build_registry();
  return registry;
}

inline const Lemma& find_lemma(const std::string& id) {
  for (const auto& l : lemma_registry())
    if (l.id == id) return l;
  throw UsageError("unknown lemma id \"" + id + "\" (see `ogl lemmas`)");
}

inline std::string format_rationals(const std::vector<mpq_class>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

inline std::string format_sizes(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

/// "1/2,3" -> {1/2, 3}.
inline std::vector<mpq_class> parse_rationals(const std::string& text) {
  std::vector<mpq_class> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      mpq_class q(item);
      q.canonicalize();
      out.push_back(q);
    } catch (const std::invalid_argument&) {
      throw UsageError("not a rational number: \"" + item + "\"");
    }
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

inline std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("not a non-negative integer: \"" + item + "\"");
    out.push_back(std::stoul(item));
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

/// Fills in lemma defaults and validates; throws UsageError.
inline Campaign resolve(Campaign c) {
  const Lemma& lemma = find_lemma(c.lemma_id);
  const bool has_nk = c.n || c.k;
  const bool has_ops = c.sigma || c.d;
  if (lemma.params == ParamKind::Operators) {
    if (!has_ops && !has_nk) {
      c.sigma = lemma.defaults.sigma;
      c.d = lemma.defaults.d;
    }
  } else if (!has_nk && !has_ops && lemma.requires_nk) {
    c.n = lemma.defaults.n;
    c.k = lemma.defaults.k;
  } else if (lemma.requires_nk && (c.n.has_value() != c.k.has_value())) {
    throw UsageError(c.lemma_id + ": give both --n and --k");
  }
  if (c.trials == 0) c.trials = lemma.defaults.trials;
  detail::usage(c.witness_budget >= 3, c.lemma_id + ": witness budget must be at least 3");
  lemma.validate(c);
  return c;
}

/// The CLI invocation reproducing the campaign.
inline std::string command_for(const Campaign& c) {
  std::string s = "ogl verify " + c.lemma_id;
  if (c.n) s += " --n " + std::to_string(*c.n);
  if (c.k) s += " --k " + std::to_string(*c.k);
  if (c.sigma) s += " --sigma " + format_rationals(*c.sigma);
  if (c.d) s += " --d " + format_sizes(*c.d);
  s += " --trials " + std::to_string(c.trials);
  s += " --seed " + std::to_string(c.seed);
  if (c.witness_budget != kDefaultWitnessBudget) s += " --witness-budget " + std::to_string(c.witness_budget);
  return s;
}

inline Json campaign_json(const Campaign& c) {
  Json j;
  j["lemma_id"] = c.lemma_id;
  if (c.n) j["n"] = *c.n;
  if (c.k) j["k"] = *c.k;
  if (c.sigma) {
    Json s = Json::array();
    for (const auto& q : *c.sigma) s.push_back(q.get_str());
    j["sigma"] = std::move(s);
  }
  if (c.d) j["d"] = *c.d;
  j["trials"] = c.trials;
  j["witness_budget"] = c.witness_budget;
  j["seed"] = c.seed;
  return j;
}

inline TrialRecord run_trial(const Lemma& lemma, const Campaign& c, std::size_t index) {
  TrialContext t(c, index);
  TrialRecord rec;
  rec.index = index;
  rec.seed = t.seed;
  try {
    lemma.trial(t);
  } catch (const std::exception& e) {
    rec.error = std::make_pair(detail::error_type_name(e), std::string(e.what()));
  }
  rec.pass = t.failures.empty() && !rec.error;
  rec.counts = std::move(t.counts);
  rec.failures = std::move(t.failures);
  if (!rec.pass || c.inline_inputs) {
    rec.inputs = std::move(t.inputs);
    rec.witnesses = std::move(t.witnesses);
  }
  return rec;
}

/// Runs every trial (on up to `jobs` threads); records are ordered by index.
inline VerificationReport run_campaign(const Campaign& campaign, std::size_t jobs = 1) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.campaign = resolve(campaign);
  const Lemma& lemma = find_lemma(report.campaign.lemma_id);
  report.claim = lemma.claim;
  report.command = command_for(report.campaign);
  const std::size_t trials = report.campaign.trials;
  report.trials.resize(trials);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < trials; i = next++) report.trials[i] = run_trial(lemma, report.campaign, i);
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, trials));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& r : report.trials) (r.pass ? report.passed : report.failed) += 1;
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline Json to_json(const TrialRecord& r) {
  Json j;
  j["index"] = r.index;
  j["seed"] = r.seed;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["counts"] = r.counts.is_null() ? Json::object() : r.counts;
  if (!r.failures.empty()) j["failures"] = r.failures;
  if (r.error) j["error"] = {{"type", r.error->first}, {"message", r.error->second}};
  if (!r.inputs.is_null() && !r.inputs.empty()) j["inputs"] = r.inputs;
  if (!r.witnesses.is_null() && !r.witnesses.empty()) j["witnesses"] = r.witnesses;
  return j;
}

inline Json to_json(const VerificationReport& r, bool with_wall_time = true) {
  Json j;
  j["type"] = "report";
  j["lemma"] = r.campaign.lemma_id;
  j["claim"] = r.claim;
  j["command"] = r.command;
  j["campaign"] = campaign_json(r.campaign);
  Json ts = Json::array();
  for (const auto& t : r.trials) ts.push_back(to_json(t));
  j["trials"] = std::move(ts);
  j["summary"] = {{"trials", r.trials.size()}, {"passed", r.passed}, {"failed", r.failed}, {"pass", r.pass()}};
  if (with_wall_time) j["wall_time_seconds"] = r.wall_time_seconds;
  return j;
}

inline std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "lemma " << r.campaign.lemma_id << ": " << r.claim << "\n";
  out << "command: " << r.command << "\n";
  for (const auto& t : r.trials) {
    if (t.pass) continue;
    out << "trial " << t.index << " (seed " << t.seed << "): FAIL";
    for (const auto& f : t.failures) out << "; " << f;
    if (t.error) out << "; " << t.error->first << ": " << t.error->second;
    out << "\n";
  }
  out << "result: " << (r.pass() ? "PASS" : "FAIL") << " " << r.passed << "/" << r.trials.size()
      << " trials passed\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Catalog.

struct CatalogEntry {
  std::string id;
  std::string claim;
  std::string command;
};

inline std::vector<CatalogEntry> list_lemmas() {
  std::vector<CatalogEntry> out;
  for (const auto& l : lemma_registry()) {
    Campaign c = l.defaults;
    c.lemma_id = l.id;
    c.seed = 1;
    out.push_back({l.id, l.claim, command_for(resolve(c))});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fixtures.

struct Fixture {
  std::string name;
  std::string description;
  std::vector<std::pair<std::string, Json>> items;  // name -> tagged document
};

namespace detail {

inline Subspace coord(std::size_t n, std::initializer_list<std::size_t> one_based) {
  std::vector<std::size_t> idx;
  for (auto i : one_based) idx.push_back(i - 1);
  return Subspace::coordinate(n, idx);
}

inline Vector ev(std::size_t n, std::initializer_list<std::size_t> one_based) {
  Vector v(n);
  for (auto i : one_based) v[i - 1] = 1;
  return v;
}

inline Json doc(const Subspace& x) { return io::tagged("subspace", io::to_json(x)); }
inline Json doc(const SelfAdjointOperator& a) { return io::tagged("operator", io::to_json(a)); }

inline std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> out;
  const Subspace e12 = coord(4, {1, 2});
  const Subspace tilted = Subspace::span({ev(4, {1}), ev(4, {2, 3})}, 4);
  out.push_back({"c4-adjacent-noncompatible", "span{e1,e2} and span{e1,e2+e3} in C^4",
                 {{"X", doc(e12)}, {"Y", doc(tilted)}}});
  out.push_back({"c4-compatible-codim2", "span{e1,e2} and span{e3,e4} in C^4",
                 {{"X", doc(e12)}, {"Y", doc(coord(4, {3, 4}))}}});
  out.push_back({"c5-unique-partner",
                 "X=span{e1,e2}, Y=span{e1,e2+e3}, Z=span{e1,e4} in C^5 and the only further common neighbour",
                 {{"X", doc(coord(5, {1, 2}))},
                  {"Y", doc(Subspace::span({ev(5, {1}), ev(5, {2, 3})}, 5))},
                  {"Z", doc(coord(5, {1, 4}))},
                  {"partner", doc(coord(5, {1, 5}))}}});
  out.push_back({"c4-exceptional-family", "the family {span{e1,e2}, span{e3,e4}} closed under complement",
                 {{"family", io::tagged("family", io::to_json(PerpClosedFamily::make({e12, coord(4, {3, 4})})))}}});

  const SpectralData s6 = SpectralData::make({0, 1, 2}, {2, 2, 2});
  const auto a = SelfAdjointOperator::make(s6, {coord(6, {1, 2}), coord(6, {3, 4}), coord(6, {5, 6})});
  const auto b = SelfAdjointOperator::make(s6, {coord(6, {1, 2}), coord(6, {3, 5}), coord(6, {4, 6})});
  out.push_back({"c6-operators-adjacent", "sigma={0,1,2}, d={2,2,2}: A and B differ in the last two eigenspaces",
                 {{"A", doc(a)}, {"B", doc(b)}}});
  const Subspace y2 = Subspace::span({ev(6, {3}), ev(6, {4, 5})}, 6);
  const auto b2 = SelfAdjointOperator::make(s6, {coord(6, {1, 2}), y2, ortho_within(y2, coord(6, {3, 4, 5, 6}))});
  out.push_back({"c6-operators-noncommuting", "as c6-operators-adjacent with the middle eigenspace span{e3,e4+e5}",
                 {{"A", doc(a)}, {"B", doc(b2)}}});
  out.push_back({"j5-2-universe", "the Johnson universe J(5,2) with Grassmann edges",
                 {{"universe", io::tagged("universe", io::to_json(johnson_universe(5, 2, GraphKind::Grassmann)))}}});
  return out;
}

}  // namespace detail

inline const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = detail::build_fixtures();
  return all;
}

inline const Fixture& find_fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw UsageError("missing fixture \"" + name + "\" (see `ogl fixture --list`)");
}

/// The fixture as a single document.
inline Json fixture_json(const Fixture& f) {
  Json items;
  for (const auto& [name, d] : f.items) items[name] = d;
  return {{"type", "fixture"}, {"name", f.name}, {"description", f.description}, {"items", std::move(items)}};
}

/// Writes <dir>/<name>.<item>.json for every item; returns the paths.
inline std::vector<std::string> emit_fixture(const std::string& name, const std::string& dir) {
  const Fixture& f = find_fixture(name);
  std::filesystem::create_directories(dir);
  std::vector<std::string> paths;
  for (const auto& [item, d] : f.items) {
    const std::string path = (std::filesystem::path(dir) / (f.name + "." + item + ".json")).string();
    io::write_file(path, io::dump(d));
    paths.push_back(path);
  }
  return paths;
}

// ---------------------------------------------------------------------------
// Validation.

struct Diagnostic {
  std::string kind;      // syntax, schema or invariant
  std::string location;  // "line:column" or a JSON pointer
  std::string message;

  std::string to_string() const { return location + ": " + kind + " error: " + message; }
};

namespace detail {

inline Diagnostic from_error(const io::DocumentError& e) {
  const std::string where = e.kind() == io::DocumentError::Kind::Syntax
                                ? std::to_string(e.line()) + ":" + std::to_string(e.column())
                                : (e.pointer().empty() ? std::string("/") : e.pointer());
  return {io::DocumentError::kind_name(e.kind()), where, e.message()};
}

inline void validate_report(const Json& j, const std::string& at) {
  using io::detail::schema_error;
  using io::detail::invariant_error;
  io::detail::expect_object(j, at, {"lemma", "claim", "command", "campaign", "trials", "summary"},
                            {"wall_time_seconds"});
  const std::string lemma = io::detail::read_string(j["lemma"], at + "/lemma");
  const Lemma* found = nullptr;
  for (const auto& l : lemma_registry())
    if (l.id == lemma) found = &l;
  if (!found) invariant_error(at + "/lemma", "unregistered lemma id \"" + lemma + "\"");
  if (j["claim"] != found->claim) invariant_error(at + "/claim", "claim differs from the registry");
  const Json& trials = io::detail::expect_array(j["trials"], at + "/trials");
  std::size_t passed = 0, failed = 0;
  for (std::size_t i = 0; i < trials.size(); ++i) {
    const std::string t_at = at + "/trials/" + std::to_string(i);
    const Json& t = trials[i];
    io::detail::expect_object(t, t_at, {"index", "seed", "verdict", "counts"},
                              {"failures", "error", "inputs", "witnesses"});
    if (io::detail::read_size(t["index"], t_at + "/index") != i) invariant_error(t_at + "/index", "trials out of order");
    const std::string verdict = io::detail::read_string(t["verdict"], t_at + "/verdict");
    if (verdict != "pass" && verdict != "fail") schema_error(t_at + "/verdict", "expected \"pass\" or \"fail\"");
    const bool troubled = t.contains("failures") || t.contains("error");
    if ((verdict == "pass") == troubled) invariant_error(t_at, "verdict disagrees with the recorded failures");
    (verdict == "pass" ? passed : failed) += 1;
  }
  const Json& s = j["summary"];
  io::detail::expect_object(s, at + "/summary", {"trials", "passed", "failed", "pass"});
  if (s["trials"] != trials.size() || s["passed"] != passed || s["failed"] != failed)
    invariant_error(at + "/summary", "counts disagree with the trial records");
  if (!s["pass"].is_boolean() || s["pass"].get<bool>() != (failed == 0))
    invariant_error(at + "/summary/pass", "aggregate verdict must be pass exactly when no trial failed");
  const Json& c = j["campaign"];
  if (!c.is_object() || !c.contains("trials") || c["trials"] != trials.size())
    invariant_error(at + "/campaign", "campaign trial count differs from the records");
}

inline void validate_tagged(const Json& j, const std::string& at) {
  if (!j.is_object()) io::detail::schema_error(at, "expected an object");
  if (!j.contains("type") || !j["type"].is_string()) io::detail::schema_error(at, "missing \"type\" tag");
  const std::string type = j["type"].get<std::string>();
  if (type == "subspace") {
    io::subspace_from_json(j, at);
  } else if (type == "operator") {
    io::operator_from_json(j, at);
  } else if (type == "universe") {
    io::universe_from_json(j, at);
  } else if (type == "family") {
    io::family_from_json(j, at);
  } else if (type == "report") {
    validate_report(j, at);
  } else {
    io::detail::schema_error(at + "/type", "unknown document type \"" + type + "\"");
  }
}

}  // namespace detail

/// Type-invariant diagnostics for a parsed document; empty means valid.
/// Fixture bundles are checked item by item.
inline std::vector<Diagnostic> validate_document(const Json& j) {
  std::vector<Diagnostic> out;
  try {
    if (j.is_object() && j.contains("type") && j["type"] == "fixture") {
      io::detail::expect_object(j, "", {"name", "description", "items"});
      if (!j["items"].is_object()) io::detail::schema_error("/items", "expected an object");
      for (auto it = j["items"].begin(); it != j["items"].end(); ++it) {
        try {
          detail::validate_tagged(it.value(), "/items/" + it.key());
        } catch (const io::DocumentError& e) {
          out.push_back(detail::from_error(e));
        }
      }
    } else {
      detail::validate_tagged(j, "");
    }
  } catch (const io::DocumentError& e) {
    out.push_back(detail::from_error(e));
  }
  return out;
}

inline std::vector<Diagnostic> validate_text(const std::string& text) {
  try {
    return validate_document(io::parse_text(text));
  } catch (const io::DocumentError& e) {
    return {detail::from_error(e)};
  }
}

/// Throws Error when the file cannot be read.
inline std::vector<Diagnostic> validate_file(const std::string& path) { return validate_text(io::read_file(path)); }

// ---------------------------------------------------------------------------
// Demonstrations.

/// Human-readable walk through the exceptional map on a random family.
inline std::string demo_dim4_exceptional(std::uint64_t seed) {
  Rng rng(seed);
  const PerpClosedFamily fam = random_perp_closed_family(2, rng);
  const ExceptionalMap f = exceptional_map(fam);
  std::ostringstream out;
  out << "family closed under complement (" << fam.size() << " planes of C^4):\n";
  for (const auto& x : fam.members()) out << "  " << x.to_string() << "\n";
  const Subspace& x = fam.members().front();
  out << "f swaps X and X^⊥:\n  f(X) = " << f(x).to_string() << "\n";
  const auto pairs = mixed_pairs_c4(fam, kPairsPerFamily, rng);
  const auto r = check_ortho_automorphism(f, pairs);
  out << "ortho-adjacency checked on " << r.pairs_checked << " pairs: " << r.violations.size() << " violations\n";
  const auto [bx, by] = find_adjacency_breaking_pair(f);
  out << "adjacency is not preserved:\n  X = " << bx.to_string() << "\n  Y = " << by.to_string() << "\n"
      << "  dim(X∩Y) = " << intersection_dim(bx, by) << ", dim(f(X)∩f(Y)) = " << intersection_dim(f(bx), f(by))
      << "\n";
  out << (r.ok() ? "result: PASS\n" : "result: FAIL\n");
  return out.str();
}

inline Json conjecture_experiment_json(std::uint64_t seed) {
  Rng rng(seed);
  const auto basis = random_orthogonal_basis(4, rng);
  const auto r = dim4_conjecture_experiment(basis);
  Json basis_json = Json::array();
  for (const auto& v : basis) basis_json.push_back(io::to_json(v));
  return {{"type", "experiment"},
          {"name", "dim4-conjecture"},
          {"seed", seed},
          {"basis", std::move(basis_json)},
          {"universe_size", r.universe_size},
          {"edges", r.edge_count},
          {"automorphisms", r.automorphisms},
          {"unitary_induced", r.unitary_induced},
          {"explained_up_to_complement", r.explained},
          {"unexplained", r.unexplained.size()}};
}

}  // namespace ogl::harness

#endif  // OGL_HARNESS_HPP
