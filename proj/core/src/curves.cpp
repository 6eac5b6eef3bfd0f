#include "tricenter/curves.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tricenter/errors.hpp"

namespace tricenter {

namespace {

const TriangleFamily& aliquot_family() {
  static const TriangleFamily F = builtin("aliquot");
  return F;
}

const TriangleFamily& nedian_family() {
  static const TriangleFamily F = builtin("nedian");
  return F;
}

Point2 nan_point() { return {nan_real(), nan_real()}; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

const char* to_string(SampleFlag f) {
  switch (f) {
    case SampleFlag::Ok:
      return "ok";
    case SampleFlag::Pole:
      return "pole";
    case SampleFlag::Degenerate:
      break;
  }
  return "degenerate";
}

TracedCurve trace_center(const Triangle& T, const CenterFunction& psi, const TriangleFamily& F, const Grid& grid) {
  if (grid.n == 0) throw DomainError("parameter grid is empty");
  TracedCurve out;
  out.center_label = psi.id();
  out.family_label = F.label();
  out.triangle = side_lengths(T);
  out.samples.reserve(grid.n);
  const Point2 X2 = centroid(T);
  std::size_t poled = 0;
  for (std::size_t i = 0; i < grid.n; ++i) {
    const Real t = grid.at(i);
    CurveSample s{t, nan_point(), SampleFlag::Pole};
    if (!F.near_pole(t)) {
      try {
        const FamilyTriangle ft = family_triangle(T, F, t);
        if (ft.degenerate) {
          s.p = X2;
          s.flag = SampleFlag::Degenerate;
        } else {
          s.p = center_point(psi, ft.triangle);
          s.flag = is_finite(s.p) ? SampleFlag::Ok : SampleFlag::Pole;
          if (s.flag == SampleFlag::Pole) s.p = nan_point();
        }
      } catch (const PoleError&) {
      } catch (const ProjectiveError&) {
      } catch (const DegenerateCenterError&) {
      }
    }
    if (s.flag == SampleFlag::Pole) ++poled;
    out.samples.push_back(s);
  }
  if (poled == grid.n) throw AllPoledError("every sample of '" + psi.id() + "' along '" + F.label() + "' is a pole");
  return out;
}

OmegaSpec OmegaSpec::parse(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3 && parts.size() != 4)
    throw ConfigError("center spec '" + text + "' must look like kind:l0:l1[:sigma]");
  OmegaSpec spec;
  if (parts[0] == "gamma")
    spec.kind = OmegaKind::Gamma;
  else if (parts[0] == "xi")
    spec.kind = OmegaKind::Xi;
  else if (parts[0] == "gamma_inv")
    spec.kind = OmegaKind::GammaInv;
  else if (parts[0] == "xi_inv")
    spec.kind = OmegaKind::XiInv;
  else
    throw ConfigError("unknown center family '" + parts[0] + "' (expected gamma, xi, gamma_inv, xi_inv)");
  auto num = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Real(v);
    } catch (const std::exception&) {
      throw ConfigError("bad number '" + s + "' in center spec '" + text + "'");
    }
  };
  spec.l0 = num(parts[1]);
  spec.l1 = num(parts[2]);
  if (parts.size() == 4) spec.sigma = num(parts[3]);
  if (spec.l0 == 0 && spec.l1 == 0) throw ConfigError("center spec '" + text + "' has l0 = l1 = 0");
  return spec;
}

std::string OmegaSpec::to_string() const {
  static const char* names[] = {"gamma", "xi", "gamma_inv", "xi_inv"};
  std::ostringstream os;
  os << names[static_cast<int>(kind)] << ":" << l0 << ":" << l1;
  if (sigma != 0) os << ":" << sigma;
  return os.str();
}

CenterFunction omega_center(const OmegaSpec& spec) {
  if (spec.l0 == 0 && spec.l1 == 0) throw DomainError("omega spec with l0 = l1 = 0");
  const Real l0 = spec.l0, l1 = spec.l1;
  const bool gamma = spec.kind == OmegaKind::Gamma || spec.kind == OmegaKind::GammaInv;
  Evaluator base;
  std::string formula;
  if (gamma) {
    base = [l0, l1](const Real& a, const Real& b, const Real& c) {
      using std::sqrt;
      const Real r = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c);
      const Real four_area = r > 0 ? Real(sqrt(r)) : Real(0);
      return sqrt3() * a * (-a * a + b * b + c * c) * l0 + a * four_area * l1;
    };
    formula = "sqrt3 a(-a^2+b^2+c^2) l0 + 4aA l1";
  } else {
    base = [l0, l1](const Real& a, const Real& b, const Real& c) {
      return -a * (-a * a + b * b + c * c) * l0 + a * (a * a + b * b + c * c) * l1;
    };
    formula = "-a(-a^2+b^2+c^2) l0 + a(a^2+b^2+c^2) l1";
  }
  OmegaSpec plain = spec;
  plain.sigma = 0;
  CenterFunction psi(plain.to_string(), std::move(base), 3, Traceability::Unknown, formula);
  if (spec.kind == OmegaKind::GammaInv || spec.kind == OmegaKind::XiInv)
    psi = isogonal_conjugate(psi).relabeled(plain.to_string());
  if (spec.sigma != 0) psi = scaled_center(psi, spec.sigma);
  return psi.relabeled(spec.to_string());
}

Point2 maclaurin_point(const Real& k, const Real& t) {
  using std::abs;
  const Real d = 1 - 3 * (1 - t) * t;
  if (!(abs(d) > Real(1e-14))) throw PoleError("Maclaurin parametrization has a pole");
  const Real f = 3 * k / (2 * d);
  return {f * (1 - t) * t, f * sqrt3() * (1 - t) * t * (1 - 2 * t)};
}

Real maclaurin_implicit_residual(const Real& k, const Point2& p) {
  return 2 * p.x * (p.x * p.x + p.y * p.y) - k * (3 * p.x * p.x - p.y * p.y);
}

Point2 limacon_point(const Real& k, const Real& t) {
  const Real q = 1 - t + t * t;
  const Real f = 3 * k / (2 * q * q);
  return {f * t * (1 + t - 2 * (2 - t) * t * t), f * sqrt3() * (1 - t) * t * (1 - 2 * t)};
}

Real limacon_implicit_residual(const Real& k, const Point2& p) {
  const Real r2 = p.x * p.x + p.y * p.y;
  const Real u = r2 - 2 * k * p.x;
  return k * k * r2 - u * u;
}

Real ShearFrame::scale() const { return std::max(norm(Vx), norm(Vy)); }

Point2 ShearFrame::unmap(const Point2& q) const {
  const Point2 d = q - origin;
  const Real det = cross(Vx, Vy);
  return {cross(d, Vy) / det, cross(Vx, d) / det};
}

ShearFrame shear_frame(const Triangle& T, const CenterFunction& psi) {
  using std::abs;
  ShearFrame f;
  f.centroid = centroid(T);
  f.origin = center_point(psi, T);
  const FamilyTriangle third = family_triangle(T, aliquot_family(), Real(1) / Real(3));
  const Point2 anchor = center_point(psi, third.triangle);
  f.Vx = f.centroid - f.origin;
  f.Vy = anchor - f.centroid;
  const Real L = longest_side(T);
  const Real nx = norm(f.Vx), ny = norm(f.Vy);
  if (!(nx > Real(1e-10) * L) || !(ny > Real(1e-10) * L))
    throw DegenerateFrameError("shear frame of '" + psi.id() + "' has a vanishing axis");
  if (!(abs(cross(f.Vx, f.Vy)) > Real(1e-10) * nx * ny))
    throw DegenerateFrameError("shear frame of '" + psi.id() + "' has parallel axes");
  return f;
}

ShapeCurve maclaurin_shape(const Real& k) {
  return {[k](const Real& t) {
            const Point2 m = maclaurin_point(k, t);
            return Point2{m.x, sqrt3() * m.y};
          },
          k, "maclaurin"};
}

ShapeCurve nedian_shape_curve(const Real& k) {
  return {[k](const Real& t) {
            const Point2 m = limacon_point(k, t);
            return Point2{m.x, sqrt3() * m.y};
          },
          k, "limacon"};
}

ShapeCurve decomposed_shape(const FamilyDecomposition& d, const Real& k) {
  return {[d, k](const Real& t) {
            const Real sigma = d.sigma(t);
            const Real tau = d.tau(t);
            if (!is_finite(tau)) return Point2{k, Real(0)};
            const Point2 m = maclaurin_point(k, tau);
            return Point2{k + sigma * (m.x - k), sqrt3() * sigma * m.y};
          },
          k, "decomposed"};
}

ShapeCurve shape_for_family(const TriangleFamily& F) {
  if (F.label() == "aliquot") return maclaurin_shape();
  if (F.label() == "nedian") return nedian_shape_curve();
  return decomposed_shape(decompose(F));
}

Point2 sheared_trisectrix_point(const ShearFrame& frame, const ShapeCurve& shape, const Real& t) {
  const Point2 l = shape(t);
  return frame.map(l / shape.k);
}

Real quantile(std::vector<Real> v, double p) {
  if (v.empty()) return nan_real();
  std::sort(v.begin(), v.end());
  const double pos = p * double(v.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  const Real w = Real(pos - double(lo));
  return v[lo] * (1 - w) + v[hi] * w;
}

TriangleResidual shape_residual(const Triangle& T, const CenterFunction& psi, const TriangleFamily& F,
                                const ShapeCurve& shape, const Grid& grid) {
  const ShearFrame frame = shear_frame(T, psi);
  const TracedCurve curve = trace_center(T, psi, F, grid);
  TriangleResidual r;
  r.frame_scale = frame.scale();
  std::vector<Real> res;
  for (const auto& s : curve.samples) {
    if (s.flag != SampleFlag::Ok) {
      ++r.excluded;
      continue;
    }
    Point2 q;
    try {
      q = sheared_trisectrix_point(frame, shape, s.t);
    } catch (const PoleError&) {
      ++r.excluded;
      continue;
    }
    const Real e = distance(s.p, q) / r.frame_scale;
    if (!is_finite(e)) {
      ++r.excluded;
      continue;
    }
    res.push_back(e);
  }
  r.used = res.size();
  if (res.empty()) throw AllPoledError("no usable samples for '" + psi.id() + "'");
  r.max_residual = *std::max_element(res.begin(), res.end());
  r.p99_residual = quantile(res, 0.99);
  return r;
}

SemiInvarianceReport verify_semi_invariance(const CenterFunction& psi, const TriangleFamily& F,
                                            const std::vector<Triangle>& triangles, const Grid& grid,
                                            const Real& tol) {
  const ShapeCurve shape = shape_for_family(F);
  SemiInvarianceReport rep;
  rep.tol = tol;
  for (const auto& T : triangles) {
    rep.per_triangle.push_back(shape_residual(T, psi, F, shape, grid));
    rep.worst_p99 = std::max(rep.worst_p99, rep.per_triangle.back().p99_residual);
    rep.worst_max = std::max(rep.worst_max, rep.per_triangle.back().max_residual);
  }
  rep.pass = !triangles.empty() && rep.worst_p99 < tol;
  return rep;
}

FrameConditions frame_conditions(const ShearFrame& f) {
  using std::abs;
  const Real nx = norm(f.Vx), ny = norm(f.Vy);
  return {abs(dot(f.Vx, f.Vy)) / (nx * ny), abs(nx * nx - 3 * ny * ny) / (nx * nx)};
}

InvarianceReport verify_invariance(const CenterFunction& psi, const std::vector<Triangle>& triangles,
                                   const Real& tol, bool check_semi) {
  InvarianceReport rep;
  bool ok = !triangles.empty();
  for (const auto& T : triangles) {
    const FrameConditions fc = frame_conditions(shear_frame(T, psi));
    rep.per_triangle.push_back(fc);
    rep.worst_orthogonality = std::max(rep.worst_orthogonality, fc.orthogonality);
    rep.worst_ratio = std::max(rep.worst_ratio, fc.ratio);
    ok = ok && fc.pass(tol);
  }
  rep.conditions_pass = ok;
  rep.semi_pass = check_semi ? verify_semi_invariance(psi, aliquot_family(), triangles).pass : true;
  rep.invariant = rep.conditions_pass && rep.semi_pass;
  return rep;
}

bool LocalPropertyReport::pass() const {
  return std::all_of(residual.begin(), residual.end(), [this](const Real& r) { return r < tol; });
}

LocalPropertyReport local_property_suite(const CenterFunction& psi, const Triangle& T, const Real& tol) {
  LocalPropertyReport rep;
  rep.tol = tol;
  const Real L = longest_side(T);
  const Point2 X2 = centroid(T);
  const Point2 X = center_point(psi, T);
  auto at = [&](const TriangleFamily& F, const Real& t) {
    const FamilyTriangle ft = family_triangle(T, F, t);
    if (ft.degenerate) return X2;
    return center_point(psi, ft.triangle);
  };
  const auto& A = aliquot_family();
  const auto& N = nedian_family();
  rep.residual[0] = std::max({distance(at(A, 0), X), distance(at(A, 1), X), distance(at(N, 0), X),
                              distance(at(N, 1), X)}) / L;
  rep.residual[1] = distance(at(A, Real(0.5)), X2 - (X - X2) / Real(2)) / L;
  rep.residual[2] = distance(at(A, Real(1) / Real(3)) + at(A, Real(2) / Real(3)), Real(2) * X2) / L;
  const Real h = Real(1e-12);
  rep.residual[3] = std::max({distance(at(N, Real(0.5)), X2), distance(at(N, Real(0.5) + h), X2),
                              distance(at(N, Real(0.5) - h), X2)}) / L;
  return rep;
}

Point2 Similarity::apply(const Point2& p) const {
  const Real y = reflect ? -p.y : p.y;
  return {ar * p.x - ai * y + br, ai * p.x + ar * y + bi};
}

Similarity fit_similarity(const Point2& s0, const Point2& s1, const Point2& d0, const Point2& d1, bool reflect) {
  // complex arithmetic: alpha = (d1 - d0) / (z1 - z0), beta = d0 - alpha z0
  const Real z0y = reflect ? -s0.y : s0.y;
  const Real z1y = reflect ? -s1.y : s1.y;
  const Real ux = s1.x - s0.x, uy = z1y - z0y;
  const Real vx = d1.x - d0.x, vy = d1.y - d0.y;
  const Real den = ux * ux + uy * uy;
  if (!(den > 0)) throw DomainError("similarity anchors coincide");
  Similarity f;
  f.reflect = reflect;
  f.ar = (vx * ux + vy * uy) / den;
  f.ai = (vy * ux - vx * uy) / den;
  f.br = d0.x - (f.ar * s0.x - f.ai * z0y);
  f.bi = d0.y - (f.ai * s0.x + f.ar * z0y);
  return f;
}

Real similarity_residual(const std::vector<Point2>& src, const std::vector<Point2>& dst, std::size_t i0,
                         std::size_t i1, Similarity* fitted) {
  Real best = Real(std::numeric_limits<double>::infinity());
  for (bool reflect : {false, true}) {
    const Similarity f = fit_similarity(src[i0], src[i1], dst[i0], dst[i1], reflect);
    Real worst = 0;
    for (std::size_t i = 0; i < src.size(); ++i) worst = std::max(worst, distance(f.apply(src[i]), dst[i]));
    if (worst < best) {
      best = worst;
      if (fitted) *fitted = f;
    }
  }
  return best;
}

Real cross_triangle_similarity_residual(const CenterFunction& psi, const TriangleFamily& F,
                                        const std::vector<Triangle>& triangles, const Grid& grid) {
  if (triangles.size() < 2) return 0;
  std::vector<TracedCurve> curves;
  for (const auto& T : triangles) curves.push_back(trace_center(T, psi, F, grid));
  const TracedCurve& ref = curves.front();
  const Point2 X2 = centroid(triangles.front());
  Real scale = 0;
  for (const auto& s : ref.samples)
    if (s.flag == SampleFlag::Ok) scale = std::max(scale, distance(s.p, X2));
  Real worst = 0;
  for (std::size_t k = 1; k < curves.size(); ++k) {
    std::vector<Point2> src, dst;
    for (std::size_t i = 0; i < grid.n; ++i) {
      if (ref.samples[i].flag != SampleFlag::Ok || curves[k].samples[i].flag != SampleFlag::Ok) continue;
      src.push_back(curves[k].samples[i].p);
      dst.push_back(ref.samples[i].p);
    }
    if (src.size() < 2) throw AllPoledError("not enough common samples to register curves");
    std::size_t i1 = 1;
    for (std::size_t i = 1; i < dst.size(); ++i)
      if (distance(dst[i], dst[0]) > distance(dst[i1], dst[0])) i1 = i;
    worst = std::max(worst, similarity_residual(src, dst, 0, i1) / scale);
  }
  return worst;
}

}  // namespace tricenter
