// Copyright 2026 The ogl Authors
// SPDX-License-Identifier: Apache-2.0

#include "ogl/subspace.hpp"

#include <gtest/gtest.h>

#include "ogl/generators.hpp"
#include "oracles.hpp"

namespace ogl {
namespace {

using oracle::e;
using oracle::std_span;

const Scalar I = Scalar::i();
const mpq_class half(1, 2);

TEST(Span, StandardVectors) {
  const Subspace s = std_span(4, {1, 2});
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_EQ(s.basis(), (ExactMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}}));
}

TEST(Span, DuplicatesCollapse) {
  EXPECT_EQ(Subspace::span({e(4, 1), e(4, 1)}, 4).dim(), 1u);
}

TEST(Span, CanonicalRref) {
  const Subspace s = Subspace::span({oracle::add(e(4, 2), e(4, 3)), e(4, 1)}, 4);
  EXPECT_EQ(s.basis(), (ExactMatrix{{1, 0, 0, 0}, {0, 1, 1, 0}}));
  EXPECT_TRUE(oracle::is_rref(s.basis()));
}

TEST(Span, AllZeroInputThrows) {
  EXPECT_THROW(Subspace::span({Vector(3)}, 3), PreconditionError);
  EXPECT_THROW(Subspace::span({}, 3), PreconditionError);
}

TEST(Span, EqualityIsBasisIndependent) {
  const Subspace a = Subspace::span({e(3, 1), e(3, 2)}, 3);
  const Subspace b = Subspace::span({oracle::add(e(3, 1), e(3, 2)), oracle::scaled(I, e(3, 2))}, 3);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.key(), b.key());
}

TEST(Lattice, Orthocomplement) {
  EXPECT_EQ(orthocomplement(std_span(4, {1, 2})), std_span(4, {3, 4}));
  EXPECT_EQ(orthocomplement(Subspace::full(3)).dim(), 0u);
  EXPECT_EQ(orthocomplement(Subspace::zero(3)), Subspace::full(3));
}

TEST(Lattice, OrthocomplementUsesHermitianForm) {
  // <(1,-i),(1,i)> = 1 + (-i)(-i) = 0 only with the conjugate in the form.
  const Subspace x = line({1, I});
  const Subspace c = orthocomplement(x);
  ASSERT_EQ(c.dim(), 1u);
  EXPECT_TRUE(inner(x.basis().row(0), c.basis().row(0)).is_zero());
  EXPECT_TRUE(c.contains(Vector{1, -I}));
  EXPECT_FALSE(c.contains(Vector{1, I}));
}

TEST(Lattice, Intersect) {
  const Subspace x = std_span(4, {1, 2});
  const Subspace y = Subspace::span({e(4, 1), oracle::add(e(4, 2), e(4, 3))}, 4);
  EXPECT_EQ(intersect(x, y), std_span(4, {1}));
  EXPECT_EQ(oracle::intersect_by_complements(x, y), std_span(4, {1}));
}

TEST(Lattice, OrthoWithin) {
  EXPECT_EQ(ortho_within(std_span(4, {1}), std_span(4, {1, 2, 3})), std_span(4, {2, 3}));
  EXPECT_THROW(ortho_within(std_span(4, {4}), std_span(4, {1, 2, 3})), PreconditionError);
}

TEST(Lattice, AmbientMismatchThrows) {
  EXPECT_THROW(sum(std_span(3, {1}), std_span(4, {1})), ShapeError);
}

TEST(Lattice, RandomIdentities) {
  Rng rng(21);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng.below(5);
    const Subspace x = random_subspace(n, 1 + rng.below(n), rng);
    const Subspace y = random_subspace(n, 1 + rng.below(n), rng);
    const Subspace meet = intersect(x, y);
    EXPECT_EQ(meet, oracle::intersect_by_complements(x, y));
    EXPECT_EQ(sum(x, y).dim() + meet.dim(), x.dim() + y.dim());
    EXPECT_EQ(orthocomplement(orthocomplement(x)), x);
    EXPECT_EQ(x.dim() + orthocomplement(x).dim(), n);
    EXPECT_TRUE(x.contains(meet) && y.contains(meet));
    EXPECT_TRUE(sum(x, y).contains(x));
  }
}

TEST(Projection, CoordinateLine) {
  EXPECT_EQ(std_span(2, {1}).projection(), (ExactMatrix{{1, 0}, {0, 0}}));
}

TEST(Projection, DiagonalLine) {
  const Subspace x = line({1, 1});
  const ExactMatrix expected{{Scalar(half), Scalar(half)}, {Scalar(half), Scalar(half)}};
  EXPECT_EQ(projection_matrix(x), expected);
  EXPECT_TRUE(oracle::is_projection_onto(expected, x));
  EXPECT_TRUE(x.contains(matvec(expected, e(2, 1))));
}

TEST(Projection, FullSpaceIsIdentity) {
  EXPECT_EQ(Subspace::full(3).projection(), ExactMatrix::identity(3));
}

TEST(Projection, RandomSubspacesSatisfyProjectionLaws) {
  Rng rng(22);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng.below(5);
    const Subspace x = random_subspace(n, 1 + rng.below(n), rng);
    EXPECT_TRUE(oracle::is_projection_onto(x.projection(), x));
    EXPECT_EQ(add(x.projection(), orthocomplement(x).projection()), ExactMatrix::identity(n));
  }
}

TEST(Predicates, Adjacency) {
  const Subspace x = std_span(4, {1, 2});
  EXPECT_TRUE(is_adjacent(x, std_span(4, {1, 3})));
  EXPECT_FALSE(is_adjacent(x, x));
  EXPECT_FALSE(is_adjacent(x, std_span(4, {3, 4})));
  EXPECT_THROW(is_adjacent(x, std_span(4, {1})), ShapeError);
}

TEST(Predicates, Compatibility) {
  const Subspace x = std_span(4, {1, 2});
  const Subspace y = Subspace::span({e(4, 1), oracle::add(e(4, 2), e(4, 3))}, 4);
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; b <= 4; ++b) EXPECT_TRUE(is_compatible(std_span(4, {a}), std_span(4, {a, b})));
  EXPECT_TRUE(is_compatible(x, std_span(4, {2, 3, 4})));
  EXPECT_FALSE(is_compatible(x, y));
  EXPECT_FALSE(oracle::commutator(x, y).is_zero());
  EXPECT_TRUE(is_compatible(x, orthocomplement(x)));
}

TEST(Predicates, OrthoAdjacency) {
  const Subspace x = std_span(4, {1, 2});
  EXPECT_TRUE(is_ortho_adjacent(x, std_span(4, {1, 3})));
  EXPECT_FALSE(is_ortho_adjacent(x, Subspace::span({e(4, 1), oracle::add(e(4, 2), e(4, 3))}, 4)));
  EXPECT_TRUE(is_ortho_adjacent(std_span(4, {1}), std_span(4, {2})));
}

TEST(Predicates, LinesAreOrthoAdjacentIffOrthogonal) {
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng.below(3);
    Vector a = random_vector(n, rng, 1), b = random_vector(n, rng, 1);
    const Subspace x = line(a), y = line(b);
    if (x == y) continue;
    EXPECT_EQ(is_ortho_adjacent(x, y), inner(a, b).is_zero());
  }
}

TEST(Predicates, CompatibilityMatchesCommutator) {
  Rng rng(24);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 2 + rng.below(4);
    const std::size_t k = 1 + rng.below(n - 1);
    const bool want = rng.coin();
    const std::size_t m = (2 * k > n ? 2 * k - n : 0) + rng.below(2);
    if (m > k || (!want && m == k)) continue;
    const auto [x, y] = pair_with_intersection(n, k, m, want, rng, 2);
    EXPECT_EQ(is_compatible(x, y), oracle::commutator(x, y).is_zero());
    EXPECT_EQ(is_compatible(x, y), want);
  }
}

TEST(AngleSignatureTest, Examples) {
  const Subspace x = std_span(4, {1, 2});
  EXPECT_EQ(angle_signature(x, std_span(4, {1, 3})), (AngleSignature{1, 1, 0}));
  EXPECT_EQ(angle_signature(x, x), (AngleSignature{2, 0, 0}));
  const Subspace y = Subspace::span({e(4, 1), oracle::add(e(4, 2), e(4, 3))}, 4);
  EXPECT_EQ(angle_signature(x, y), (AngleSignature{1, 0, 1}));
}

TEST(AngleSignatureTest, CompatibleIffNoMiddleAngles) {
  Rng rng(25);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 3 + rng.below(4);
    const std::size_t k = 1 + rng.below(n - 1);
    const Subspace x = random_subspace(n, k, rng, 2), y = random_subspace(n, k, rng, 2);
    const auto sig = angle_signature(x, y);
    EXPECT_EQ(sig.zeros + sig.right + sig.middle, k);
    EXPECT_EQ(sig.middle == 0, is_compatible(x, y));
  }
}

TEST(OrthogonalBasis, PairwiseOrthogonalAndSpanning) {
  Rng rng(26);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng.below(5);
    const Subspace x = random_subspace(n, 1 + rng.below(n), rng);
    const auto b = orthogonal_basis(x);
    ASSERT_EQ(b.size(), x.dim());
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) EXPECT_TRUE(inner(b[i], b[j]).is_zero());
    EXPECT_EQ(Subspace::span(b, n), x);
  }
}

}  // namespace
}  // namespace ogl
