// Copyright 2026 The ogl Authors
// SPDX-License-Identifier: Apache-2.0

#include "ogl/generators.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace ogl {
namespace {

TEST(Seeds, DeriveSeedIsStableAndSpreads) {
  static_assert(derive_seed(1, 0) == derive_seed(1, 0));
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(Generators, SameSeedSameSubspace) {
  EXPECT_EQ(random_subspace(4, 2, 4, 99), random_subspace(4, 2, 4, 99));
  EXPECT_EQ(pair_with_intersection(6, 3, 1, false, 5).first, pair_with_intersection(6, 3, 1, false, 5).first);
}

TEST(Generators, RandomSubspaceHasRequestedDimension) {
  Rng rng(31);
  for (std::size_t n = 1; n <= 7; ++n)
    for (std::size_t k = 1; k <= n; ++k) EXPECT_EQ(random_subspace(n, k, rng).dim(), k);
}

TEST(Generators, UnitaryIsUnitary) {
  Rng rng(32);
  for (std::size_t n = 1; n <= 8; ++n) {
    const ExactMatrix u = random_unitary(n, rng);
    EXPECT_EQ(matmul(u, adjoint(u)), ExactMatrix::identity(n));
  }
}

TEST(Generators, PairWithIntersectionHonoursRequest) {
  Rng rng(33);
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t k = 1; k < n; ++k)
      for (std::size_t m = (2 * k > n ? 2 * k - n : 0); m <= k; ++m)
        for (bool compatible : {true, false}) {
          if (!compatible && m == k) continue;
          if (!compatible && n > 6) continue;
          const auto [x, y] = pair_with_intersection(n, k, m, compatible, rng);
          EXPECT_EQ(x.dim(), k);
          EXPECT_EQ(y.dim(), k);
          EXPECT_EQ(intersect(x, y).dim(), m);
          EXPECT_EQ(oracle::commutator(x, y).is_zero(), compatible);
        }
}

TEST(Generators, CompatibleDisjointPairIsOrthogonalWhenRoomy) {
  Rng rng(34);
  const auto [x, y] = pair_with_intersection(5, 2, 0, true, rng);
  EXPECT_TRUE(is_orthogonal(x, y));
}

TEST(Generators, ImpossibleRequestsThrow) {
  Rng rng(35);
  EXPECT_THROW(pair_with_intersection(4, 3, 1, true, rng), PreconditionError);
  EXPECT_THROW(pair_with_intersection(4, 2, 2, false, rng), PreconditionError);
  EXPECT_THROW(compatible_codim2_pair(4, 3, rng), PreconditionError);
}

TEST(Generators, SubspaceInStaysInside) {
  Rng rng(36);
  const Subspace v = random_subspace(6, 4, rng);
  for (std::size_t d = 0; d <= 4; ++d) {
    const Subspace s = random_subspace_in(v, d, rng);
    EXPECT_EQ(s.dim(), d);
    EXPECT_TRUE(v.contains(s));
  }
}

TEST(Generators, MixedBlockStaysOrthogonalAndMovesEveryVector) {
  Rng rng(31);
  for (std::size_t c = 2; c <= 4; ++c) {
    const auto basis = random_orthogonal_basis(5, rng);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < c; ++i) idx.push_back(4 - i);
    const auto mixed = mix_orthogonal_block(basis, idx);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) EXPECT_TRUE(inner(mixed[i], mixed[j]).is_zero());
    for (std::size_t i = 0; i < 5 - c; ++i) EXPECT_EQ(mixed[i], basis[i]);
    const Subspace block = span_of(basis, idx, 5);
    for (auto j : idx) {
      EXPECT_TRUE(block.contains(mixed[j]));
      for (auto i : idx) EXPECT_NE(line(mixed[j]), line(basis[i]));
    }
  }
  EXPECT_THROW(mix_orthogonal_block(random_orthogonal_basis(3, rng), {0}), PreconditionError);
}

}  // namespace
}  // namespace ogl
