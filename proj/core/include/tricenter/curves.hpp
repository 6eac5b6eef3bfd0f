#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "tricenter/centers.hpp"
#include "tricenter/families.hpp"

namespace tricenter {

enum class SampleFlag { Ok, Pole, Degenerate };
const char* to_string(SampleFlag f);

struct CurveSample {
  Real t;
  Point2 p;  // X2 for degenerate samples, NaN for poles
  SampleFlag flag;
};

struct TracedCurve {
  std::vector<CurveSample> samples;
  std::string center_label;
  std::string family_label;
  SideLengths triangle;
};

struct Grid {
  Real tmin{-0.5};
  Real tmax{1.5};
  std::size_t n{512};

  Real at(std::size_t i) const { return n == 1 ? tmin : tmin + (tmax - tmin) * Real(i) / Real(n - 1); }
};

TracedCurve trace_center(const Triangle& T, const CenterFunction& psi, const TriangleFamily& F, const Grid& grid);

// The four two-parameter center families (plus the scaled-family parameter).
enum class OmegaKind { Gamma, Xi, GammaInv, XiInv };
struct OmegaSpec {
  OmegaKind kind{OmegaKind::Gamma};
  Real l0{1};
  Real l1{1};
  Real sigma{0};

  // "gamma:l0:l1[:sigma]", "xi:...", "gamma_inv:...", "xi_inv:..."
  static OmegaSpec parse(const std::string& text);
  std::string to_string() const;
};
CenterFunction omega_center(const OmegaSpec& spec);

Point2 maclaurin_point(const Real& k, const Real& t);
Real maclaurin_implicit_residual(const Real& k, const Point2& p);
Point2 limacon_point(const Real& k, const Real& t);
Real limacon_implicit_residual(const Real& k, const Point2& p);

struct ShearFrame {
  Point2 origin;  // X_psi
  Point2 Vx;      // X2 - X_psi
  Point2 Vy;      // X_psi of the aliquot triangle at 1/3, minus X2
  Point2 centroid;

  Real scale() const;
  Point2 map(const Point2& l) const { return origin + l.x * Vx + l.y * Vy; }
  // frame coordinates of a point (inverse of map)
  Point2 unmap(const Point2& q) const;
};
ShearFrame shear_frame(const Triangle& T, const CenterFunction& psi);

// Unsheared coordinates (l_x, l_y) of a canonical curve of size k.
struct ShapeCurve {
  std::function<Point2(const Real&)> l;
  Real k{1};
  std::string name;

  Point2 operator()(const Real& t) const { return l(t); }
};
ShapeCurve maclaurin_shape(const Real& k = Real(1));
ShapeCurve nedian_shape_curve(const Real& k = Real(1));
ShapeCurve decomposed_shape(const FamilyDecomposition& d, const Real& k = Real(1));
// aliquot -> Maclaurin, nedian -> Limacon, anything else through decompose().
ShapeCurve shape_for_family(const TriangleFamily& F);

Point2 sheared_trisectrix_point(const ShearFrame& frame, const ShapeCurve& shape, const Real& t);

struct TriangleResidual {
  Real max_residual{0};
  Real p99_residual{0};
  Real frame_scale{0};
  std::size_t used{0};
  std::size_t excluded{0};
};
struct SemiInvarianceReport {
  std::vector<TriangleResidual> per_triangle;
  Real worst_p99{0};
  Real worst_max{0};
  Real tol{1e-9};
  bool pass{false};
};
// Residuals are relative to the frame scale max(|Vx|, |Vy|).
TriangleResidual shape_residual(const Triangle& T, const CenterFunction& psi, const TriangleFamily& F,
                                const ShapeCurve& shape, const Grid& grid);
SemiInvarianceReport verify_semi_invariance(const CenterFunction& psi, const TriangleFamily& F,
                                            const std::vector<Triangle>& triangles, const Grid& grid = {},
                                            const Real& tol = Real(1e-9));

struct FrameConditions {
  Real orthogonality{0};  // |Vx.Vy| / (|Vx||Vy|)
  Real ratio{0};          // ||Vx|^2 - 3|Vy|^2| / |Vx|^2
  bool pass(const Real& tol) const { return orthogonality < tol && ratio < tol; }
};
FrameConditions frame_conditions(const ShearFrame& f);

struct InvarianceReport {
  std::vector<FrameConditions> per_triangle;
  Real worst_orthogonality{0};
  Real worst_ratio{0};
  bool conditions_pass{false};
  bool semi_pass{false};
  bool invariant{false};
};
InvarianceReport verify_invariance(const CenterFunction& psi, const std::vector<Triangle>& triangles,
                                   const Real& tol = Real(1e-9), bool check_semi = true);

struct LocalPropertyReport {
  // 0: interpolation at t=0,1 (aliquot and nedian); 1: aliquot 1/2 is the
  // reflected midpoint; 2: aliquot 1/3 and 2/3 mirror through X2;
  // 3: nedian 1/2 collapses to X2.
  std::array<Real, 4> residual{};
  Real tol{1e-10};
  bool pass() const;
};
LocalPropertyReport local_property_suite(const CenterFunction& psi, const Triangle& T,
                                         const Real& tol = Real(1e-10));

// z -> alpha z + beta (or alpha conj(z) + beta) fitted exactly on two anchors.
struct Similarity {
  Real ar{1}, ai{0}, br{0}, bi{0};
  bool reflect{false};
  Point2 apply(const Point2& p) const;
};
Similarity fit_similarity(const Point2& s0, const Point2& s1, const Point2& d0, const Point2& d1, bool reflect);
// Best of the direct and reflected fits on anchors (i0, i1); returns the max
// pointwise distance over all pairs.
Real similarity_residual(const std::vector<Point2>& src, const std::vector<Point2>& dst, std::size_t i0,
                         std::size_t i1, Similarity* fitted = nullptr);

// Traces psi along F for every triangle, registers each curve onto the first
// by a two-anchor similarity and reports the worst residual relative to the
// first curve's scale max |P - X2|.
Real cross_triangle_similarity_residual(const CenterFunction& psi, const TriangleFamily& F,
                                        const std::vector<Triangle>& triangles, const Grid& grid);

// p-quantile (0..1) of a sample; NaN for an empty input.
Real quantile(std::vector<Real> v, double p);

}  // namespace tricenter
