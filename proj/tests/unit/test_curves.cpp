#include <gtest/gtest.h>

#include <cmath>

#include "tricenter/catalog.hpp"
#include "tricenter/curves.hpp"
#include "tricenter/errors.hpp"
#include "tricenter/sampling.hpp"

using namespace tricenter;

namespace {

const CenterFunction& X(const char* label) { return catalog_center(label); }

std::vector<Triangle> triangles(std::uint64_t seed, int n) {
  Rng rng(seed);
  std::vector<Triangle> out;
  for (int i = 0; i < n; ++i) out.push_back(random_non_equilateral_triangle(rng));
  return out;
}

double d(const Point2& p, const Point2& q) { return to_double(distance(p, q)); }

}  // namespace

TEST(TraceCenter, CentroidIsConstant) {
  const Triangle T = canonical_placement({2, 3, 4});
  const TracedCurve c = trace_center(T, X("X2"), builtin("nedian"), Grid{});
  ASSERT_EQ(c.samples.size(), 512u);
  for (const auto& s : c.samples) ASSERT_LT(d(s.p, centroid(T)), 1e-12);
}

TEST(TraceCenter, ScalingTracesLineThroughCentroid) {
  const Triangle T = canonical_placement({3, 4, 5});
  const Point2 X3 = center_point(X("X3"), T), X2 = centroid(T);
  const TracedCurve c = trace_center(T, X("X3"), builtin("scaling"), Grid{-2, 3, 101});
  for (const auto& s : c.samples) {
    if (s.flag != SampleFlag::Ok) continue;
    ASSERT_LT(std::abs(to_double(cross(s.p - X2, X3 - X2))), 1e-12);
  }
}

TEST(TraceCenter, AliquotEndpointsHitCenter) {
  const Triangle T = canonical_placement({3, 4, 5});
  const TracedCurve c = trace_center(T, X("X13"), builtin("aliquot"), Grid{0, 1, 2});
  const Point2 X13 = center_point(X("X13"), T);
  EXPECT_LT(d(c.samples[0].p, X13), 1e-12);
  EXPECT_LT(d(c.samples[1].p, X13), 1e-12);
}

TEST(TraceCenter, FlagsDegenerateAndPoles) {
  const Triangle T = canonical_placement({2, 3, 4});
  const TracedCurve c = trace_center(T, X("X3"), builtin("nedian"), Grid{0, 1, 3});
  EXPECT_EQ(c.samples[1].flag, SampleFlag::Degenerate);
  EXPECT_LT(d(c.samples[1].p, centroid(T)), 1e-15);
  EXPECT_EQ(std::string(to_string(SampleFlag::Pole)), "pole");
}

TEST(OmegaCenter, GammaMembers) {
  const SideLengths s{2, 3, 4};
  auto pd = [&](const CenterFunction& p, const CenterFunction& q) {
    return to_double(projective_distance(as_triple(center_trilinears(p, s)), as_triple(center_trilinears(q, s))));
  };
  EXPECT_LT(pd(omega_center(OmegaSpec::parse("gamma:1:1")), X("X15")), 1e-13);
  EXPECT_LT(pd(omega_center(OmegaSpec::parse("gamma:-1:1")), X("X16")), 1e-13);
}

TEST(OmegaCenter, XiOnBrocardAxis) {
  const SideLengths s{2, 3, 4};
  const Real r = collinearity_residual(center_barycentrics(omega_center(OmegaSpec::parse("xi:1:1")), s),
                                       center_barycentrics(X("X3"), s), center_barycentrics(X("X6"), s));
  EXPECT_LT(std::abs(to_double(r)), 1e-10);
}

TEST(OmegaSpec, ParseAndFormat) {
  const OmegaSpec spec = OmegaSpec::parse("xi_inv:2:-0.5:0.25");
  EXPECT_EQ(spec.kind, OmegaKind::XiInv);
  EXPECT_EQ(to_double(spec.l0), 2);
  EXPECT_EQ(to_double(spec.l1), -0.5);
  EXPECT_EQ(to_double(spec.sigma), 0.25);
  EXPECT_EQ(OmegaSpec::parse(spec.to_string()).to_string(), spec.to_string());
  EXPECT_THROW(OmegaSpec::parse("delta:1:1"), ConfigError);
  EXPECT_THROW(OmegaSpec::parse("gamma:1"), ConfigError);
  EXPECT_THROW(OmegaSpec::parse("gamma:x:1"), ConfigError);
  EXPECT_THROW(OmegaSpec::parse("gamma:0:0"), ConfigError);
}

TEST(OmegaCenter, SigmaShiftsTowardCentroid) {
  const Triangle T = canonical_placement({2, 3, 4});
  const Point2 p = center_point(omega_center(OmegaSpec::parse("gamma:1:1")), T);
  const Point2 q = center_point(omega_center(OmegaSpec::parse("gamma:1:1:0.25")), T);
  EXPECT_LT(d(q, Real(0.75) * p + Real(0.25) * centroid(T)), 1e-12);
}

TEST(Maclaurin, AnchorPoints) {
  const Real k = Real(1.7);
  EXPECT_LT(d(maclaurin_point(k, 0), {0, 0}), 1e-15);
  EXPECT_LT(d(maclaurin_point(k, Real(1) / 3), {k, k / sqrt3()}), 1e-14);
}

TEST(Maclaurin, ImplicitForm) {
  const Real k = Real(1.7);
  EXPECT_EQ(to_double(maclaurin_implicit_residual(k, {0, 0})), 0);
  EXPECT_NEAR(to_double(maclaurin_implicit_residual(k, {k, k / sqrt3()})), 0, 1e-14);
  EXPECT_NEAR(to_double(maclaurin_implicit_residual(k, {k, 0})), -to_double(k * k * k), 1e-14);
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const Real t = uniform(rng, -0.4, 1.4);
    if (std::abs(to_double(t) - 0.5) < 1e-2) continue;
    const Point2 m = maclaurin_point(k, t);
    ASSERT_LT(std::abs(to_double(maclaurin_implicit_residual(k, m))),
              1e-12 * to_double(k * k * k) * std::max(1.0, std::pow(to_double(norm(m) / k), 3)));
  }
}

TEST(Limacon, AnchorPointsAndImplicitForm) {
  const Real k = Real(0.8);
  EXPECT_LT(d(limacon_point(k, 0), {0, 0}), 1e-15);
  EXPECT_NEAR(to_double(limacon_point(k, 0.5).y), 0, 1e-15);
  EXPECT_EQ(to_double(limacon_implicit_residual(k, {0, 0})), 0);
  EXPECT_NEAR(to_double(limacon_implicit_residual(k, {3 * k, 0})), 0, 1e-14);
  EXPECT_NEAR(to_double(limacon_implicit_residual(k, {k, k})), 2 * std::pow(to_double(k), 4), 1e-14);
  Rng rng(2);
  const double k4 = std::pow(to_double(k), 4);
  for (int i = 0; i < 100; ++i) {
    const Real t = uniform(rng, -0.5, 1.5);
    ASSERT_LT(std::abs(to_double(limacon_implicit_residual(k, limacon_point(k, t)))), 1e-10 * k4);
  }
}

TEST(ShearFrame, InvariantCenterConditions) {
  const ShearFrame f = shear_frame(canonical_placement({3, 4, 5}), X("X13"));
  EXPECT_TRUE(frame_conditions(f).pass(1e-9));
}

TEST(ShearFrame, CentroidIsDegenerate) {
  EXPECT_THROW(shear_frame(canonical_placement({3, 4, 5}), X("X2")), DegenerateFrameError);
  // gamma_inv with l0 = 0 is the centroid
  EXPECT_THROW(shear_frame(canonical_placement({2, 3, 4}), omega_center(OmegaSpec::parse("gamma_inv:0:1"))),
               DegenerateFrameError);
}

TEST(ShearFrame, CircumcenterIsSheared) {
  const ShearFrame f = shear_frame(canonical_placement({2, 3, 4}), X("X3"));
  EXPECT_GT(to_double(frame_conditions(f).orthogonality), 1e-3);
  EXPECT_FALSE(frame_conditions(shear_frame(canonical_placement({2, 3, 4}), X("X6"))).pass(1e-9));
}

TEST(ShearFrame, MapUnmapRoundTrip) {
  const ShearFrame f = shear_frame(canonical_placement({2, 3, 4}), X("X15"));
  const Point2 l{Real(0.3), Real(-1.2)};
  EXPECT_LT(d(f.unmap(f.map(l)), l), 1e-13);
}

TEST(ShearedTrisectrix, Anchors) {
  const Triangle T = canonical_placement({2, 3, 4});
  const ShearFrame f = shear_frame(T, X("X15"));
  const ShapeCurve m = maclaurin_shape();
  EXPECT_LT(d(sheared_trisectrix_point(f, m, 0), f.origin), 1e-14);
  const Point2 third = center_point(X("X15"), family_triangle(T, builtin("aliquot"), Real(1) / 3).triangle);
  EXPECT_LT(d(sheared_trisectrix_point(f, m, Real(1) / 3), third), 1e-12);
}

TEST(ShearedTrisectrix, OmegaAlongAliquot) {
  const Triangle T = canonical_placement({2, 3, 4});
  for (const char* spec : {"gamma:0.7:-1.3", "xi:2:5", "gamma_inv:1.5:0.4", "xi_inv:-0.3:1"}) {
    const CenterFunction psi = omega_center(OmegaSpec::parse(spec));
    const TriangleResidual r = shape_residual(T, psi, builtin("aliquot"), maclaurin_shape(), Grid{});
    EXPECT_LT(to_double(r.max_residual), 1e-9) << spec;
  }
}

TEST(SemiInvariance, CircumcenterAliquot) {
  const auto rep = verify_semi_invariance(X("X3"), builtin("aliquot"), triangles(3, 20));
  EXPECT_TRUE(rep.pass);
  EXPECT_LT(to_double(rep.worst_max), 1e-9);
}

TEST(SemiInvariance, GenericCenterFails) {
  const auto rep = verify_semi_invariance(X("X59"), builtin("aliquot"), triangles(4, 5));
  EXPECT_FALSE(rep.pass);
  EXPECT_GT(to_double(rep.worst_p99), 1e-3);
}

TEST(SemiInvariance, NedianLimacon) {
  EXPECT_TRUE(verify_semi_invariance(X("X15"), builtin("nedian"), triangles(5, 10)).pass);
  EXPECT_TRUE(verify_semi_invariance(omega_center(OmegaSpec::parse("xi:2:5")), builtin("nedian"), triangles(6, 10)).pass);
}

TEST(SemiInvariance, NedianMatchesDecomposedShape) {
  // the Limacon shape equals the decomposed Maclaurin shape with the nedian sigma, tau
  const ShapeCurve a = nedian_shape_curve(), b = decomposed_shape(decompose(builtin("nedian")));
  for (double t : {-0.4, 0.0, 0.2, 0.45, 0.55, 0.9, 1.3}) EXPECT_LT(d(a(t), b(t)), 1e-12) << t;
}

TEST(SemiInvariance, DecomposableFamily) {
  const TriangleFamily AA = concat(builtin("aliquot"), builtin("nedian"));
  EXPECT_TRUE(verify_semi_invariance(X("X13"), AA, triangles(7, 5)).pass);
}

TEST(SemiInvariance, ImplicitMembership) {
  const Triangle T = canonical_placement({2, 3, 4});
  const ShearFrame f = shear_frame(T, X("X13"));
  const TracedCurve c = trace_center(T, X("X13"), builtin("aliquot"), Grid{});
  for (const auto& s : c.samples) {
    if (s.flag != SampleFlag::Ok) continue;
    const Point2 l = f.unmap(s.p);
    const Point2 m{l.x, l.y / sqrt3()};  // undo the sqrt3 stretch of the shape curve
    const double scale = std::max(1.0, std::pow(to_double(norm(m)), 3));
    ASSERT_LT(std::abs(to_double(maclaurin_implicit_residual(1, m))), 1e-9 * scale);
  }
}

TEST(Invariance, IsodynamicAndIsogonicCenters) {
  const auto tris = triangles(8, 20);
  for (const char* label : {"X13", "X14", "X15", "X16"}) {
    const auto rep = verify_invariance(X(label), tris);
    EXPECT_TRUE(rep.invariant) << label;
  }
}

TEST(Invariance, XiMembersAreNot) {
  const auto tris = triangles(9, 5);
  for (const char* spec : {"xi:1:1", "xi:2:5", "xi:-1:3"})
    EXPECT_FALSE(verify_invariance(omega_center(OmegaSpec::parse(spec)), tris, 1e-9, false).conditions_pass) << spec;
}

TEST(LocalProperties, CatalogCenters) {
  const Triangle T = canonical_placement({3, 4, 5});
  for (const char* label : {"X1", "X2", "X3", "X13", "X15"}) EXPECT_TRUE(local_property_suite(X(label), T).pass()) << label;
}

TEST(LocalProperties, NedianHalfAtCentroid) {
  const ShearFrame f = shear_frame(canonical_placement({2, 3, 4}), X("X15"));
  EXPECT_LT(d(sheared_trisectrix_point(f, nedian_shape_curve(), 0.5), f.centroid), 1e-12);
}

TEST(Similarity, ExactOnSimilarCopies) {
  std::vector<Point2> src{{0, 0}, {1, 0}, {0.3, 0.8}, {-0.5, 0.2}};
  std::vector<Point2> dst;
  const Real c = std::cos(0.7), s = std::sin(0.7);
  for (const auto& p : src) dst.push_back({Real(2) * (c * p.x + s * p.y) + 1, Real(2) * (s * p.x - c * p.y) - 3});
  Similarity fit;
  EXPECT_LT(to_double(similarity_residual(src, dst, 0, 1, &fit)), 1e-14);
  EXPECT_TRUE(fit.reflect);
}

TEST(Similarity, CrossTriangle) {
  EXPECT_LT(to_double(cross_triangle_similarity_residual(X("X15"), builtin("aliquot"), triangles(10, 4), Grid{})),
            1e-8);
  EXPECT_GT(to_double(cross_triangle_similarity_residual(X("X3"), builtin("aliquot"), triangles(10, 4), Grid{})),
            1e-4);
}

TEST(ScaledFamily, PointwiseIdentity) {
  const Triangle T = canonical_placement({2, 3, 4});
  for (double sigma : {-1.0, 0.5, 2.0}) {
    const CenterFunction ps = scaled_center(X("X15"), sigma);
    const TracedCurve a = trace_center(T, ps, builtin("aliquot"), Grid{});
    const TracedCurve b = trace_center(T, X("X15"), builtin("aliquot"), Grid{});
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
      if (a.samples[i].flag != SampleFlag::Ok || b.samples[i].flag != SampleFlag::Ok) continue;
      const Point2 want = Real(1 - sigma) * b.samples[i].p + Real(sigma) * centroid(T);
      ASSERT_LT(d(a.samples[i].p, want), 1e-10);
    }
  }
}

TEST(ScaledFamily, EquivalenceHoldsWithComplementaryScaling) {
  // tracing psi_sigma along F equals tracing psi along scaling(1 - sigma) o F
  const Triangle T = canonical_placement({2, 3, 4});
  const TriangleFamily A = builtin("aliquot");
  for (double sigma : {-1.0, 0.5, 2.0}) {
    const Triple S = builtin("scaling")(Real(1 - sigma));
    const TriangleFamily SA = make_family("sa", [S, A](const Real& t) { return concat_triples(S, A(t)); });
    const TracedCurve a = trace_center(T, scaled_center(X("X15"), sigma), A, Grid{});
    const TracedCurve b = trace_center(T, X("X15"), SA, Grid{});
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
      if (a.samples[i].flag != SampleFlag::Ok || b.samples[i].flag != SampleFlag::Ok) continue;
      ASSERT_LT(d(a.samples[i].p, b.samples[i].p), 1e-10);
    }
  }
}

TEST(Quantile, Basic) {
  EXPECT_EQ(to_double(quantile({1, 2, 3, 4, 5}, 0.5)), 3);
  EXPECT_EQ(to_double(quantile({5, 1}, 1.0)), 5);
  EXPECT_TRUE(std::isnan(to_double(quantile({}, 0.5))));
}
