#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "tricenter/catalog.hpp"
#include "tricenter/errors.hpp"
#include "tricenter/inverse_design.hpp"
#include "tricenter/sampling.hpp"

using namespace tricenter;

namespace {

double pd(const Triple& u, const Triple& v) { return to_double(projective_distance(u, v)); }

PolarTarget constant_target(double rho) {
  return {[rho](const Real&) { return Real(rho); }, [](const Real&) { return Real(0); }, {-1, 1}, Real(0.05), "const"};
}

// smooth target with |r| in [0.1, 0.8] and theta inside the admissible band
PolarTarget random_smooth_target(Rng& rng) {
  const Real r0 = uniform(rng, 0.3, 0.6), r1 = uniform(rng, -0.2, 0.2), w = uniform(rng, 0.5, 3);
  const Real th0 = uniform(rng, -0.5, 0.5), th1 = uniform(rng, 0.5, 1.5);
  return {[=](const Real& t) {
            using std::sin;
            return r0 + r1 * sin(w * t);
          }, [=](const Real& t) { return th0 + th1 * t; },
          {-2, 2}, Real(0.05), "smooth"};
}

}  // namespace

TEST(PolarTriple, ConstantTarget) {
  const TriangleFamily F = family_from_target(constant_target(0.3));
  for (double t : {-0.9, 0.0, 0.5}) EXPECT_LT(pd(F(t), {1.3, 1.3, 1 - 0.6}), 1e-15);
}

TEST(PolarTriple, SumIsThree) {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const Triple v = polar_triple(uniform(rng, -2, 2), uniform(rng, -4.7, 4.7));
    ASSERT_NEAR(to_double(v[0] + v[1] + v[2]), 3, 1e-13);
  }
}

TEST(PolarTriple, EqualComponentsOnlyAtZeroRadius) {
  const Triple v = polar_triple(0, Real(1.1));
  EXPECT_EQ(to_double(v[0]), 1);
  EXPECT_EQ(to_double(v[1]), 1);
  EXPECT_EQ(to_double(v[2]), 1);
  const Triple w = polar_triple(Real(1e-3), Real(1.1));
  using std::abs;
  EXPECT_GT(to_double(std::max(Real(abs(w[0] - w[1])), Real(abs(w[1] - w[2])))), 1e-4);
}

TEST(SigmaTau, ZeroAngle) {
  const SigmaTau st = sigma_tau_from_target(constant_target(0.4));
  EXPECT_NEAR(to_double(st.sigma(0)), -0.4, 1e-15);
  EXPECT_NEAR(to_double(st.tau(0)), 1, 1e-15);
}

TEST(SigmaTau, ReconstructsRoseFamily) {
  const PolarTarget target = rose_target(1, 4);
  const TriangleFamily F = family_from_target(target);
  const SigmaTau st = sigma_tau_from_target(target);
  Rng rng(2);
  int used = 0;
  for (int i = 0; i < 200; ++i) {
    const Real t = uniform(rng, to_double(target.domain.lo), to_double(target.domain.hi));
    if (!target.active(t)) continue;
    try {
      ASSERT_LT(pd(scaling_aliquot_triple(st.sigma(t), st.tau(t)), F(t)), 1e-10) << to_double(t);
      ++used;
    } catch (const BranchPoleError&) {
    }
  }
  EXPECT_GT(used, 150);
}

TEST(SigmaTau, BranchPole) {
  // -1 + 2 cos(2 theta / 3) vanishes at theta = -pi/2
  const PolarTarget target{[](const Real&) { return Real(0.5); }, [](const Real& t) { return t; }, {-2, 2}, Real(0.05),
                           "line"};
  const SigmaTau st = sigma_tau_from_target(target);
  try {
    st.tau(-pi() / 2);
    FAIL() << "expected a branch pole";
  } catch (const BranchPoleError& e) {
    EXPECT_NEAR(e.at, -M_PI / 2, 1e-12);
  }
}

TEST(RoseFamily, Values) {
  const TriangleFamily F = rose_family(Real(0.7), 4);
  EXPECT_LT(pd(F(0), {1.7, 1.7, 1 - 1.4}), 1e-15);
  const TriangleFamily G = family_from_target(rose_target(Real(0.7), 4));
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const Real t = uniform(rng, -4.7, 4.7);
    ASSERT_LT(pd(F(t), G(t)), 1e-15);
  }
}

TEST(Targets, DomainGate) {
  EXPECT_THROW(rose_target(1, 4, {-5, 5}), DomainError);
  const PolarTarget wild{[](const Real&) { return Real(0.5); }, [](const Real& t) { return 6 * t; }, {-1, 1},
                         Real(0.05), "wild"};
  EXPECT_THROW(validate_target(wild), DomainError);
  EXPECT_THROW(rose_target(0, 4), DomainError);
}

TEST(Targets, ParseRose) {
  const PolarTarget t = parse_target("rose(0.5, 3)");
  EXPECT_NEAR(to_double(t.r(0)), 0.5, 1e-15);
  EXPECT_NEAR(to_double(t.r(M_PI / 3)), -0.5, 1e-14);
}

TEST(Targets, TabulatedInterpolation) {
  const std::string path = ::testing::TempDir() + "target.txt";
  {
    std::ofstream out(path);
    out << "# t r theta\n0 0.5 0\n1, 0.7, 1\n2 0.3 0.5\n";
  }
  const PolarTarget t = parse_target(path);
  EXPECT_NEAR(to_double(t.r(0.5)), 0.6, 1e-15);
  EXPECT_NEAR(to_double(t.theta(1.5)), 0.75, 1e-15);
  EXPECT_EQ(to_double(t.domain.hi), 2);
  EXPECT_THROW(t.r(2.5), DomainError);
  std::remove(path.c_str());
  EXPECT_THROW(parse_target("/nonexistent/target.txt"), ConfigError);
}

TEST(Targets, TabulatedErrors) {
  EXPECT_THROW(tabulated_target({{0, 1, 0}}), DomainError);
  EXPECT_THROW(tabulated_target({{0, 1, 0}, {0, 1, 0}}), DomainError);
  EXPECT_THROW(tabulated_target({{0, 1, 0}, {1, 1, 5}}), DomainError);
}

TEST(Reproduction, RoseX13Similarity) {
  const PolarTarget target = rose_target(1, 4);
  const auto rep = verify_target_reproduction(catalog_center("X13"), target, canonical_placement({3, 4, 5}),
                                              Grid{target.domain.lo, target.domain.hi, 1001});
  EXPECT_EQ(rep.registration, Registration::Similarity);
  EXPECT_LT(to_double(rep.residual), 1e-8);
  EXPECT_GT(rep.skipped, 0u);
}

TEST(Reproduction, RoseX3Affine) {
  const PolarTarget target = rose_target(1, 4);
  const auto rep = verify_target_reproduction(catalog_center("X3"), target, canonical_placement({3, 4, 5}),
                                              Grid{target.domain.lo, target.domain.hi, 1001});
  EXPECT_EQ(rep.registration, Registration::Affine);
  EXPECT_LT(to_double(rep.residual), 1e-8);
}

TEST(Reproduction, ConstantTargetIsSinglePoint) {
  const PolarTarget target = constant_target(0.4);
  const Triangle T = canonical_placement({3, 4, 5});
  const auto rep = verify_target_reproduction(catalog_center("X13"), target, T, Grid{-1, 1, 21}, Registration::Affine);
  EXPECT_LT(to_double(rep.residual), 1e-8);
  for (const auto& s : rep.curve.samples)
    EXPECT_LT(to_double(distance(s.p, rep.curve.samples.front().p)), 1e-12);
}

TEST(Reproduction, RandomTargetsInvariantCenters) {
  Rng rng(4);
  Rng trng(5);
  for (int k = 0; k < 5; ++k) {
    const PolarTarget target = random_smooth_target(rng);
    const Triangle T = random_non_equilateral_triangle(trng);
    for (const char* label : {"X13", "X14", "X15", "X16"}) {
      const auto rep = verify_target_reproduction(catalog_center(label), target, T, Grid{-2, 2, 201},
                                                  Registration::Similarity);
      EXPECT_LT(to_double(rep.residual), 1e-8) << label;
    }
  }
}

TEST(Reproduction, RandomTargetsOmegaMembersAffine) {
  Rng rng(6);
  Rng trng(7);
  for (const char* spec : {"gamma:0.4:1.1", "xi:2:5", "gamma:-1.2:0.3", "xi:-0.7:1", "gamma:1:2"}) {
    const PolarTarget target = random_smooth_target(rng);
    const Triangle T = random_non_equilateral_triangle(trng);
    const auto rep = verify_target_reproduction(omega_center(OmegaSpec::parse(spec)), target, T, Grid{-2, 2, 201},
                                                Registration::Affine);
    EXPECT_LT(to_double(rep.residual), 1e-8) << spec;
  }
}

TEST(FamilyFromTarget, PassesFamilyChecks) {
  Rng rng(8);
  const PolarTarget target = random_smooth_target(rng);
  const TriangleFamily F = validated(family_from_target(target));
  EXPECT_TRUE(decomposability_report(F).decomposable);
}

TEST(SigmaTau, BranchPolesBetweenSamples) {
  const PolarTarget target{[](const Real&) { return Real(0.5); }, [](const Real& t) { return t; }, {-2, 2}, Real(0.05),
                           "line"};
  const auto poles = branch_poles(target, Grid{-2, 2, 40});
  ASSERT_EQ(poles.size(), 2u);
  EXPECT_NEAR(to_double(poles[0]), -M_PI / 2, 1e-12);
  EXPECT_NEAR(to_double(poles[1]), M_PI / 2, 1e-12);
  EXPECT_TRUE(branch_poles(rose_target(1, 4), Grid{-1, 1, 100}).empty());
}
