#include <gtest/gtest.h>

#include <cmath>

#include "tricenter/errors.hpp"
#include "tricenter/geom_core.hpp"
#include "tricenter/sampling.hpp"

using namespace tricenter;

namespace {

Real rel(const Real& got, const Real& want) {
  using std::abs;
  return abs(got - want) / std::max(Real(1), abs(want));
}

}  // namespace

TEST(HeronArea, RightTriangle) { EXPECT_NEAR(to_double(heron_area({3, 4, 5})), 6.0, 1e-14); }

TEST(HeronArea, Equilateral) { EXPECT_NEAR(to_double(heron_area({1, 1, 1})), std::sqrt(3.0) / 4, 1e-15); }

TEST(HeronArea, MatchesCrossProductArea) {
  const SideLengths s{2, 3, 4};
  const Triangle T = canonical_placement(s);
  const Real cross_area = cross(T.B - T.A, T.C - T.A) / 2;
  EXPECT_LT(to_double(rel(heron_area(s), cross_area)), 1e-12);
}

TEST(HeronArea, RejectsInvalidSides) {
  EXPECT_THROW(heron_area({1, 2, 3}), DomainError);
  EXPECT_THROW(heron_area({-1, 2, 2}), DomainError);
}

TEST(CanonicalPlacement, RightTriangle) {
  const Triangle T = canonical_placement({3, 4, 5});
  EXPECT_NEAR(to_double(T.A.x), 0, 1e-15);
  EXPECT_NEAR(to_double(T.A.y), 0, 1e-15);
  EXPECT_NEAR(to_double(T.B.x), 5, 1e-15);
  EXPECT_NEAR(to_double(T.B.y), 0, 1e-15);
  EXPECT_NEAR(to_double(T.C.x), 3.2, 1e-14);
  EXPECT_NEAR(to_double(T.C.y), 2.4, 1e-14);
  EXPECT_NEAR(to_double(distance(T.C, T.A)), 4, 1e-14);
  EXPECT_NEAR(to_double(distance(T.C, T.B)), 3, 1e-14);
}

TEST(CanonicalPlacement, EquilateralApex) {
  const Triangle T = canonical_placement({1, 1, 1});
  EXPECT_NEAR(to_double(T.C.x), 0.5, 1e-15);
  EXPECT_NEAR(to_double(T.C.y), std::sqrt(3.0) / 2, 1e-15);
}

TEST(CanonicalPlacement, RoundTripRandom) {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const SideLengths s = sample_shape(rng).scaled(uniform(rng, 0.1, 10));
    const SideLengths r = side_lengths(canonical_placement(s));
    ASSERT_LT(to_double(rel(r.a, s.a)), 1e-12);
    ASSERT_LT(to_double(rel(r.b, s.b)), 1e-12);
    ASSERT_LT(to_double(rel(r.c, s.c)), 1e-12);
    ASSERT_LT(to_double(rel(heron_area(s), signed_double_area(canonical_placement(s)) / 2)), 1e-12);
  }
}

TEST(BaryToPoint, EqualWeightsGiveCentroid) {
  const Triangle T = canonical_placement({2, 3, 4});
  const Point2 g = bary_to_point(T, {1, 1, 1});
  EXPECT_LT(to_double(distance(g, centroid(T))), 1e-15);
  EXPECT_LT(to_double(distance(g, (T.A + T.B + T.C) / Real(3))), 1e-15);
}

TEST(BaryToPoint, VertexWeight) {
  const Triangle T = canonical_placement({2, 3, 4});
  EXPECT_LT(to_double(distance(bary_to_point(T, {1, 0, 0}), T.A)), 1e-15);
}

TEST(BaryToPoint, ZeroSumIsProjectiveError) {
  const Triangle T = canonical_placement({2, 3, 4});
  EXPECT_THROW(bary_to_point(T, {1, 1, -2}), ProjectiveError);
}

TEST(BaryToPoint, InvariantUnderWeightScaling) {
  Rng rng(3);
  const Triangle T = random_triangle(rng);
  for (int i = 0; i < 100; ++i) {
    const Barycentric b{uniform(rng, -1, 2), uniform(rng, -1, 2), uniform(rng, 0.5, 2)};
    const Real k = uniform(rng, -5, 5);
    if (std::abs(to_double(b.sum())) < 0.1 || std::abs(to_double(k)) < 1e-3) continue;
    const Point2 p = bary_to_point(T, b);
    const Point2 q = bary_to_point(T, {k * b.l1, k * b.l2, k * b.l3});
    ASSERT_LT(to_double(distance(p, q) / std::max(Real(1), norm(p))), 1e-12);
  }
}

TEST(TrilinearToBary, MultipliesBySides) {
  const Barycentric b = trilinear_to_bary({3, 4, 5}, {1, 1, 1});
  EXPECT_DOUBLE_EQ(to_double(b.l1), 3);
  EXPECT_DOUBLE_EQ(to_double(b.l2), 4);
  EXPECT_DOUBLE_EQ(to_double(b.l3), 5);
  const Barycentric c = trilinear_to_bary({2, 3, 4}, {2, 0, 1});
  EXPECT_DOUBLE_EQ(to_double(c.l1), 4);
  EXPECT_DOUBLE_EQ(to_double(c.l2), 0);
  EXPECT_DOUBLE_EQ(to_double(c.l3), 4);
}

TEST(TrilinearToBary, CentroidTrilinears) {
  const SideLengths s{2, 3, 4};
  const Barycentric b = trilinear_to_bary(s, {1 / s.a, 1 / s.b, 1 / s.c});
  EXPECT_NEAR(to_double(b.l1), 1, 1e-15);
  EXPECT_NEAR(to_double(b.l2), 1, 1e-15);
  EXPECT_NEAR(to_double(b.l3), 1, 1e-15);
}

TEST(TrilinearToBary, MatchesDistanceDefinition) {
  // trilinears are proportional to the signed distances to the sides
  const SideLengths s{2, 3, 4};
  const Triangle T = canonical_placement(s);
  const Point2 p = bary_to_point(T, trilinear_to_bary(s, {Real(0.7), Real(0.3), Real(0.5)}));
  auto dist = [&](const Point2& u, const Point2& v) { return cross(v - u, p - u) / distance(u, v); };
  const Real d1 = dist(T.B, T.C), d2 = dist(T.C, T.A), d3 = dist(T.A, T.B);
  EXPECT_LT(to_double(projective_distance({d1, d2, d3}, {Real(0.7), Real(0.3), Real(0.5)})), 1e-12);
}

TEST(Collinearity, DependentTriple) {
  EXPECT_NEAR(to_double(collinearity_residual({1, 0, 0}, {0, 1, 0}, {1, 1, 0})), 0, 1e-15);
}

TEST(Collinearity, IdentityMatrix) {
  using std::abs;
  EXPECT_NEAR(to_double(abs(collinearity_residual({1, 0, 0}, {0, 1, 0}, {0, 0, 1}))), 1, 1e-15);
}

TEST(Degeneracy, CollinearVertices) {
  const Triangle T{{0, 0}, {1, 0}, {2, Real(1e-14)}};
  EXPECT_TRUE(is_degenerate(T));
  EXPECT_FALSE(is_degenerate(canonical_placement({3, 4, 5})));
  EXPECT_THROW(Triangle::checked({0, 0}, {1, 0}, {2, 0}), DomainError);
}

TEST(ProjectiveDistance, ScaleAndSignInvariant) {
  const Triple u{1, -1, Real(0.5)};
  EXPECT_NEAR(to_double(projective_distance(u, {-2, 2, -1})), 0, 1e-15);
  // near-tie between opposite-sign components must not flip the normalization
  EXPECT_NEAR(to_double(projective_distance({1, Real(-1 + 1e-15), 0}, {-1, Real(1 - 1e-15), 0})), 0, 1e-14);
  EXPECT_GT(to_double(projective_distance(u, {1, 1, 1})), 0.5);
}

TEST(Sampling, ShapesRespectRegion) {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const SideLengths s = sample_shape(rng);
    ASSERT_EQ(to_double(s.a), 1);
    ASSERT_TRUE(in_shape_region(s.b, s.c));
  }
}

TEST(Sampling, DeterministicForSeed) {
  Rng r1(5), r2(5);
  for (int i = 0; i < 10; ++i) {
    const Triangle a = random_triangle(r1), b = random_triangle(r2);
    ASSERT_EQ(to_double(a.C.x), to_double(b.C.x));
  }
}

TEST(Sampling, NonEquilateral) {
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const SideLengths s = side_lengths(random_non_equilateral_triangle(rng, 0.05));
    const Real L = s.longest();
    using std::abs;
    ASSERT_GT(to_double(std::max({abs(s.a - s.b), abs(s.b - s.c), abs(s.c - s.a)}) / L), 0.05);
  }
}
