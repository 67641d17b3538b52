// Copyright 2026 The ogl Authors
// SPDX-License-Identifier: Apache-2.0

#include "ogl/orthograph.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

namespace ogl {
namespace {

using oracle::e;
using oracle::std_span;

// span{e_a, e_b + e_c}
Subspace tilted(std::size_t n, std::size_t a, std::size_t b, std::size_t c) {
  return Subspace::span({e(n, a), oracle::add(e(n, b), e(n, c))}, n);
}

TEST(Type1, Examples) {
  const Subspace x4 = std_span(4, {1, 2}), y4 = tilted(4, 1, 2, 3);
  EXPECT_EQ(type1_neighbor(x4, y4, std_span(4, {4})), std_span(4, {1, 4}));
  const Subspace x5 = std_span(5, {1, 2}), y5 = tilted(5, 1, 2, 3);
  EXPECT_EQ(type1_neighbor(x5, y5, std_span(5, {5})), std_span(5, {1, 5}));
  EXPECT_THROW(type1_neighbor(x5, y5, line(oracle::add(e(5, 3), e(5, 4)))), PreconditionError);
}

TEST(Type2, Examples) {
  const Subspace x = std_span(4, {1, 2}), y = tilted(4, 1, 2, 3);
  EXPECT_EQ(type2_neighbor(x, y, Subspace::zero(4)), std_span(4, {2, 3}));
  EXPECT_THROW(type2_neighbor(x, y, std_span(4, {1})), PreconditionError);

  const Subspace x6 = std_span(6, {1, 2, 3});
  const Subspace y6 = Subspace::span({e(6, 1), e(6, 2), oracle::add(e(6, 3), e(6, 4))}, 6);
  const Subspace z = type2_neighbor(x6, y6, line(oracle::add(e(6, 1), e(6, 2))));
  EXPECT_TRUE(is_ortho_adjacent(z, x6));
  EXPECT_TRUE(is_ortho_adjacent(z, y6));
}

TEST(ClassifyNeighbor, Examples) {
  const Subspace x = std_span(4, {1, 2}), y = tilted(4, 1, 2, 3);
  EXPECT_EQ(classify_common_neighbor(x, y, std_span(4, {1, 4})), NeighborType::Type1);
  EXPECT_EQ(classify_common_neighbor(x, y, std_span(4, {2, 3})), NeighborType::Type2);
  EXPECT_THROW(classify_common_neighbor(x, y, x), PreconditionError);
}

TEST(CountNeighbors, DimensionFourIsExactlyTwoOrthogonal) {
  const Subspace x = std_span(4, {1, 2}), y = tilted(4, 1, 2, 3);
  const auto c = count_common_neighbors(x, y);
  ASSERT_TRUE(c.exact);
  ASSERT_EQ(c.neighbors.size(), 2u);
  std::set<std::string> got{c.neighbors[0].key(), c.neighbors[1].key()};
  EXPECT_EQ(got, (std::set<std::string>{std_span(4, {1, 4}).key(), std_span(4, {2, 3}).key()}));
  EXPECT_TRUE(is_orthogonal(c.neighbors[0], c.neighbors[1]));
}

TEST(CountNeighbors, LargerSpacesGiveManyWitnesses) {
  const auto c5 = count_common_neighbors(std_span(5, {1, 2}), tilted(5, 1, 2, 3), 5);
  EXPECT_FALSE(c5.exact);
  EXPECT_GE(c5.neighbors.size(), 5u);
  const Subspace x6 = std_span(6, {1, 2, 3});
  const Subspace y6 = Subspace::span({e(6, 1), e(6, 2), oracle::add(e(6, 3), e(6, 4))}, 6);
  const auto c6 = count_common_neighbors(x6, y6, 5);
  EXPECT_FALSE(c6.exact);
  std::set<std::string> keys;
  for (const auto& z : c6.neighbors) {
    keys.insert(z.key());
    EXPECT_TRUE(is_ortho_adjacent(z, x6) && is_ortho_adjacent(z, y6));
  }
  EXPECT_GE(keys.size(), 5u);
}

TEST(CountNeighbors, SmallCasesAreExact) {
  // Lines in C^3: the single line orthogonal to both.
  const auto c31 = count_common_neighbors(std_span(3, {1}), line(oracle::add(e(3, 1), e(3, 2))));
  EXPECT_TRUE(c31.exact);
  EXPECT_EQ(c31.neighbors.size(), 1u);
  // Planes in C^3: the only candidate is the complement of X∩Y.
  const auto c32 = count_common_neighbors(std_span(3, {1, 2}), tilted(3, 1, 2, 3));
  EXPECT_TRUE(c32.exact);
  EXPECT_EQ(c32.neighbors.size(), 1u);
  // Lines in C^2 have no common ortho-neighbour.
  const auto c21 = count_common_neighbors(std_span(2, {1}), line(oracle::add(e(2, 1), e(2, 2))));
  EXPECT_TRUE(c21.exact);
  EXPECT_TRUE(c21.neighbors.empty());
}

TEST(CountNeighbors, RandomPairsAreConsistent) {
  Rng rng(51);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 3 + rng.below(4);
    const std::size_t k = 1 + rng.below(n - 1);
    if (2 * k - (k - 1) > n) continue;
    const auto [x, y] = adjacent_noncompatible_pair(n, k, rng);
    const auto c = count_common_neighbors(x, y, 4);
    for (const auto& z : c.neighbors) {
      EXPECT_TRUE(is_ortho_adjacent(z, x) && is_ortho_adjacent(z, y));
      const auto type = classify_common_neighbor(x, y, z);
      EXPECT_EQ(type == NeighborType::Type2, sum(x, y).contains(z));
    }
    EXPECT_EQ(c.exact, (n == 4 && k == 2) || n == 3 || n == 2);
  }
}

TEST(TwoExtensions, Examples) {
  const Subspace x = std_span(4, {1, 2}), y = std_span(4, {3, 4});
  auto [a, b] = two_extensions(x, y, std_span(4, {1, 3}));
  EXPECT_EQ(a, std_span(4, {2, 3}));
  EXPECT_EQ(b, std_span(4, {1, 4}));
  std::tie(a, b) = two_extensions(x, y, std_span(4, {2, 4}));
  EXPECT_EQ(a, std_span(4, {1, 4}));
  EXPECT_EQ(b, std_span(4, {2, 3}));
  EXPECT_THROW(two_extensions(std_span(4, {1, 2}), Subspace::span({oracle::add(e(4, 1), e(4, 3)), e(4, 4)}, 4),
                              std_span(4, {1, 4})),
               PreconditionError);
}

TEST(TwoExtensions, RandomConfigurationsHaveExactlyTwo) {
  Rng rng(52);
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{4, 2}, {6, 3}, {7, 3}, {6, 2}}) {
    for (int t = 0; t < 5; ++t) {
      const auto [x, y] = compatible_codim2_pair(n, k, rng);
      const Subspace w = intersect(x, y);
      const Subspace p = random_line_in(ortho_within(w, x), rng);
      const Subspace q = random_line_in(ortho_within(w, y), rng);
      const Subspace z = sum(sum(w, p), q);
      ASSERT_TRUE(is_ortho_adjacent(z, x) && is_ortho_adjacent(z, y));
      const auto [z1, z2] = two_extensions(x, y, z);
      const auto found = common_neighbors_in_shared_basis(x, y, z);
      std::set<std::string> keys;
      for (const auto& f : found) keys.insert(f.key());
      EXPECT_EQ(keys, (std::set<std::string>{z1.key(), z2.key()}));
    }
  }
}

TEST(UniquePartner, Examples) {
  const Subspace x = std_span(5, {1, 2}), y = tilted(5, 1, 2, 3);
  EXPECT_EQ(unique_partner(x, y, std_span(5, {1, 4})), std_span(5, {1, 5}));
  EXPECT_EQ(unique_partner(x, y, std_span(5, {1, 5})), std_span(5, {1, 4}));
  EXPECT_THROW(unique_partner(std_span(4, {1, 2}), tilted(4, 1, 2, 3), std_span(4, {1, 4})), PreconditionError);
}

TEST(UniquePartner, RandomPairs) {
  Rng rng(53);
  for (std::size_t k : {2u, 3u, 4u}) {
    const std::size_t n = k + 3;
    for (int t = 0; t < 4; ++t) {
      const auto [x, y] = adjacent_noncompatible_pair(n, k, rng);
      const Subspace p = random_line_in(orthocomplement(sum(x, y)), rng);
      const Subspace z = type1_neighbor(x, y, p);
      const Subspace partner = unique_partner(x, y, z);
      EXPECT_TRUE(is_ortho_adjacent(partner, z));
      EXPECT_EQ(unique_partner(x, y, partner), z);
    }
  }
}

TEST(DecideCompatibility, Examples) {
  EXPECT_TRUE(decide_compatibility_by_geodesics(std_span(4, {1, 2}), std_span(4, {3, 4})).compatible);

  const Subspace x = std_span(4, {1, 2});
  const Subspace y = Subspace::span({oracle::add(e(4, 1), e(4, 3)), e(4, 4)}, 4);
  const auto d = decide_compatibility_by_geodesics(x, y);
  ASSERT_FALSE(d.compatible);
  ASSERT_TRUE(d.witness.has_value());
  EXPECT_EQ(d.witness->length(), 2u);
  EXPECT_TRUE(d.witness->first_non_ortho_step().has_value());
  EXPECT_FALSE(is_compatible(x, y));

  const Subspace a = std_span(4, {1, 2}), b = tilted(4, 1, 2, 3);
  const auto adj = decide_compatibility_by_geodesics(a, b);
  ASSERT_TRUE(adj.witness.has_value());
  EXPECT_EQ(adj.witness->vertices(), (std::vector<Subspace>{a, b}));
}

TEST(DecideCompatibility, AgreesWithCommutatorOnRandomPairs) {
  Rng rng(54);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng.below(6);
    const std::size_t k = 1 + rng.below(n - 1);
    const std::size_t lo = 2 * k > n ? 2 * k - n : 0;
    const std::size_t m = lo + rng.below(k - lo);
    const bool want = rng.coin();
    const auto [x, y] = pair_with_intersection(n, k, m, want, rng, 2);
    const auto d = decide_compatibility_by_geodesics(x, y, kDefaultSearchBudget, rng.next());
    EXPECT_EQ(d.compatible, is_compatible(x, y));
    if (!d.compatible) {
      ASSERT_TRUE(d.witness.has_value());
      EXPECT_EQ(d.witness->length(), grassmann_distance(x, y));
      EXPECT_TRUE(d.witness->first_non_ortho_step().has_value());
    }
  }
}

TEST(Distance2, Examples) {
  const auto a = classify_distance2(std_span(6, {1, 2}), tilted(6, 1, 2, 3));
  EXPECT_EQ(a.direct, Distance2Case::AdjacentNonCompatible);
  EXPECT_EQ(a.profile, (GeodesicProfile{Multiplicity::Many, Multiplicity::Many}));

  const auto b = classify_distance2(std_span(4, {1, 2}), std_span(4, {3, 4}));
  EXPECT_EQ(b.direct, Distance2Case::CompatibleCodim2);
  EXPECT_EQ(b.profile.extensions, Multiplicity::Two);

  const auto c = classify_distance2(std_span(5, {1, 2}), tilted(5, 1, 2, 3));
  EXPECT_EQ(c.direct, Distance2Case::AdjacentNonCompatible);
  EXPECT_EQ(c.profile, (GeodesicProfile{Multiplicity::Many, Multiplicity::One}));
  EXPECT_EQ(c.from_profile, Distance2Case::AdjacentNonCompatible);

  EXPECT_THROW(classify_distance2(std_span(4, {1, 2}), std_span(4, {1, 3})), PreconditionError);
}

TEST(Distance2, HighDimensionalSideUsesComplements) {
  // k = 4 in C^6 is handled as k = 2 through orthocomplements.
  Rng rng(55);
  const auto [x, y] = adjacent_noncompatible_pair(6, 4, rng);
  const auto r = classify_distance2(x, y);
  EXPECT_EQ(r.direct, Distance2Case::AdjacentNonCompatible);
  EXPECT_EQ(r.profile, (GeodesicProfile{Multiplicity::Many, Multiplicity::Many}));
  for (const auto& z : r.middles) {
    EXPECT_EQ(z.dim(), 4u);
    EXPECT_TRUE(is_ortho_adjacent(z, x) && is_ortho_adjacent(z, y));
  }
}

TEST(Distance2, InsideASubspaceMatchesTheSmallerSpace) {
  // The same pairs in C^4, C^5 and in V = span{e1..e4} or span{e1..e5} of C^7.
  const Subspace v4 = std_span(7, {1, 2, 3, 4}), v5 = std_span(7, {1, 2, 3, 4, 5});
  const auto small = classify_distance2(std_span(5, {1, 2}), tilted(5, 1, 2, 3));
  const auto inside = classify_distance2(std_span(7, {1, 2}), tilted(7, 1, 2, 3), 5, std::nullopt, v5);
  EXPECT_EQ(inside.profile, small.profile);
  EXPECT_EQ(inside.profile, (GeodesicProfile{Multiplicity::Many, Multiplicity::One}));
  for (const auto& z : inside.middles) EXPECT_TRUE(v5.contains(z));
  const auto whole = classify_distance2(std_span(7, {1, 2}), tilted(7, 1, 2, 3));
  EXPECT_EQ(whole.profile, (GeodesicProfile{Multiplicity::Many, Multiplicity::Many}));

  const auto comp = classify_distance2(std_span(7, {1, 2}), std_span(7, {3, 4}), 5, std::nullopt, v4);
  EXPECT_EQ(comp.profile.extensions, Multiplicity::Two);
  const Subspace y3 = Subspace::span({e(7, 1), e(7, 2), oracle::add(e(7, 3), e(7, 4))}, 7);
  const auto flipped = classify_distance2(std_span(7, {1, 2, 3}), y3, 5, std::nullopt, v5);
  EXPECT_EQ(flipped.direct, Distance2Case::AdjacentNonCompatible);
  for (const auto& z : flipped.middles) EXPECT_EQ(z.dim(), 3u);
  EXPECT_THROW(classify_distance2(std_span(7, {1, 6}), tilted(7, 1, 6, 3), 5, std::nullopt, v4), PreconditionError);
}

TEST(Distance2, NonCompatibleCodim2NeedsWitnessAndHasNoExtension) {
  Rng rng(56);
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{4, 2}, {5, 2}, {6, 3}, {7, 3}}) {
    const auto t = noncompatible_codim2_with_neighbor(n, k, rng);
    EXPECT_THROW(classify_distance2(t.x, t.y), PreconditionError);
    const auto r = classify_distance2(t.x, t.y, kDefaultWitnessBudget, t.z);
    EXPECT_EQ(r.direct, Distance2Case::NonCompatibleCodim2);
    EXPECT_TRUE(r.extensions.empty());
  }
}

TEST(WitnessLemma, OrthoAdjacentMiddlesForceCompatibility) {
  Rng rng(57);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 4 + rng.below(4);
    const std::size_t k = 2 + rng.below(std::min<std::size_t>(n - 3, 2));
    if (rng.coin()) {
      const auto [x, y] = compatible_codim2_pair(n, k, rng);
      const Subspace w = intersect(x, y);
      const Subspace z = sum(sum(w, random_line_in(ortho_within(w, x), rng)), random_line_in(ortho_within(w, y), rng));
      const auto [z1, z2] = two_extensions(x, y, z);
      EXPECT_TRUE(is_ortho_adjacent(z, z1));
      EXPECT_TRUE(is_compatible(x, y));
    } else {
      // Non-compatible pairs with a common neighbour Z: no constructed or
      // basis-spanned candidate is ortho-adjacent to X, Y and Z.
      const auto tr = noncompatible_codim2_with_neighbor(n, k, rng);
      std::vector<Vector> zb = orthogonal_basis(tr.z);
      for (auto& v : orthogonal_basis(orthocomplement(tr.z))) zb.push_back(v);
      for (const auto& c : basis_spanned(zb, k)) {
        if (c == tr.z) continue;
        EXPECT_FALSE(is_ortho_adjacent(c, tr.z) && is_ortho_adjacent(c, tr.x) && is_ortho_adjacent(c, tr.y));
      }
    }
  }
}

TEST(Dim4, OrthoAdjacencyIgnoresComplementOfSecondArgument) {
  Rng rng(58);
  for (int t = 0; t < 60; ++t) {
    Subspace x = random_subspace(4, 2, rng, 1), y = random_subspace(4, 2, rng, 1);
    if (t % 3 == 0) std::tie(x, y) = pair_with_intersection(4, 2, 1, rng.coin(), rng, 2);
    if (x == y || x == orthocomplement(y)) continue;
    EXPECT_EQ(is_ortho_adjacent(x, y), is_ortho_adjacent(x, orthocomplement(y)));
  }
}

TEST(Cliques, StarAndTopExamples) {
  std::vector<Vector> std4{e(4, 1), e(4, 2), e(4, 3), e(4, 4)};
  const auto star = ortho_star_elements(std_span(4, {1}), std4);
  EXPECT_EQ(star, (std::vector<Subspace>{std_span(4, {1, 2}), std_span(4, {1, 3}), std_span(4, {1, 4})}));
  const auto top = ortho_top_elements(std_span(4, {1, 2, 3}), std4);
  std::set<std::string> keys;
  for (const auto& t : top) keys.insert(t.key());
  EXPECT_EQ(keys, (std::set<std::string>{std_span(4, {1, 2}).key(), std_span(4, {1, 3}).key(),
                                         std_span(4, {2, 3}).key()}));

  const Vector plus = oracle::add(e(4, 2), e(4, 3));
  const Vector minus = oracle::add(e(4, 2), oracle::scaled(-1, e(4, 3)));
  const std::vector<Vector> b{e(4, 1), plus, minus, e(4, 4)};
  EXPECT_EQ(ortho_star_elements(line(plus), b).size(), 3u);
  EXPECT_THROW(ortho_star_elements(std_span(4, {2}), b), PreconditionError);
  EXPECT_THROW(ortho_star_elements(std_span(4, {1}), {e(4, 1), plus, e(4, 2), e(4, 4)}), PreconditionError);
}

TEST(Cliques, SizesOnRandomBases) {
  Rng rng(59);
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t k = 1; k < n; ++k) {
      const auto basis = random_orthogonal_basis(n, rng);
      std::vector<std::size_t> s_idx, u_idx;
      for (std::size_t i = 0; i + 1 < k; ++i) s_idx.push_back(i);
      for (std::size_t i = 0; i <= k; ++i) u_idx.push_back(i);
      EXPECT_EQ(ortho_star_elements(span_of(basis, s_idx, n), basis).size(), n - k + 1);
      EXPECT_EQ(ortho_top_elements(span_of(basis, u_idx, n), basis).size(), k + 1);
    }
}

TEST(Cliques, IntersectionSizes) {
  const std::size_t n = 6;
  std::vector<Vector> b;
  for (std::size_t i = 1; i <= n; ++i) b.push_back(e(n, i));
  // Rotate the plane (b_i, b_j) by 45 degrees (unnormalised).
  auto rotate = [](std::vector<Vector> v, std::size_t i, std::size_t j) {
    const Vector a = v[i], c = v[j];
    v[i] = oracle::add(a, c);
    v[j] = oracle::add(a, oracle::scaled(-1, c));
    return v;
  };
  const Subspace s = std_span(n, {1, 2});
  const auto star = ortho_star_elements(s, b);
  EXPECT_EQ(clique_intersection_size(star, ortho_star_elements(s, rotate(b, 2, 3))), 2u);
  EXPECT_EQ(clique_intersection_size(star, ortho_star_elements(s, rotate(rotate(b, 2, 3), 4, 5))), 0u);
  // A 3-cycle mix of b3, b4, b5 keeps only b6.
  std::vector<Vector> mix = b;
  mix[2] = oracle::add(oracle::add(b[2], b[3]), b[4]);
  mix[3] = oracle::add(b[2], oracle::scaled(-1, b[3]));
  mix[4] = oracle::add(oracle::add(b[2], b[3]), oracle::scaled(-2, b[4]));
  EXPECT_EQ(clique_intersection_size(star, ortho_star_elements(s, mix)), 1u);

  const Subspace u = std_span(n, {1, 2, 3, 4});
  EXPECT_EQ(clique_intersection_size(star, ortho_top_elements(u, b)), 2u);
  EXPECT_EQ(clique_intersection_size(star, ortho_top_elements(u, rotate(b, 0, 2))), 1u);
  EXPECT_EQ(clique_intersection_size(star, ortho_top_elements(std_span(n, {1, 3, 4, 5}), b)), 0u);

  EXPECT_LE(clique_intersection_size(star, ortho_star_elements(std_span(n, {1, 3}), b)), 1u);
}

TEST(Connectivity, OrthoWalksOnRandomPairs) {
  Rng rng(60);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 3 + rng.below(4);
    const std::size_t k = 1 + rng.below(n - 1);
    const Subspace x = random_subspace(n, k, rng, 1), y = random_subspace(n, k, rng, 1);
    const auto walk = ortho_walk(x, y);
    EXPECT_EQ(walk.front(), x);
    EXPECT_EQ(walk.back(), y);
  }
}

TEST(Connectivity, JohnsonOrthoUniverseIsConnected) {
  const auto u = johnson_universe(5, 2, GraphKind::Ortho);
  for (const auto& v : u.vertices()) EXPECT_TRUE(bfs_distance(u, u.vertices().front(), v).has_value());
}

}  // namespace
}  // namespace ogl
