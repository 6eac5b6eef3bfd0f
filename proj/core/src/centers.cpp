#include "tricenter/centers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "tricenter/errors.hpp"
#include "tricenter/sampling.hpp"

namespace tricenter {

namespace {

constexpr double kEpsRel = 1e-12;

Real abs_max3(const Real& x, const Real& y, const Real& z) {
  using std::abs;
  return std::max({Real(abs(x)), Real(abs(y)), Real(abs(z))});
}

Real ipow(const Real& base, int e) {
  Real r = 1;
  const bool neg = e < 0;
  for (int i = 0; i < (neg ? -e : e); ++i) r *= base;
  return neg ? Real(1) / r : r;
}

// Shapes used by the sampled property checks: a random scale and a random
// relabeling of a point of the shape region, so no side is pinned to 1.
SideLengths sample_scaled_shape(Rng& rng) {
  SideLengths s = sample_shape(rng);
  std::array<Real, 3> v{s.a, s.b, s.c};
  std::shuffle(v.begin(), v.end(), rng);
  const Real k = uniform(rng, 0.3, 3.0);
  return {k * v[0], k * v[1], k * v[2]};
}

void ensure_traceable(const CenterFunction& psi) {
  if (psi.traceability() == Traceability::Yes) return;
  if (psi.traceability() == Traceability::No)
    throw NotTraceableError("center '" + psi.id() + "' is not traceable");
  const TraceabilityReport rep = traceability_report(psi, 2000, 0);
  if (rep.verdict == TraceVerdict::NotTraceable) {
    std::ostringstream os;
    os << "center '" << psi.id() << "' is not traceable (trace vanishes near (" << rep.argmin.a << ", "
       << rep.argmin.b << ", " << rep.argmin.c << "))";
    throw NotTraceableError(os.str());
  }
}

std::optional<int> add_degrees(std::optional<int> x, std::optional<int> y) {
  if (x && y) return *x + *y;
  return std::nullopt;
}

}  // namespace

const char* to_string(Traceability t) {
  switch (t) {
    case Traceability::Yes:
      return "yes";
    case Traceability::No:
      return "no";
    case Traceability::Unknown:
      break;
  }
  return "unknown";
}

CenterFunction::CenterFunction(std::string id, Evaluator f, std::optional<int> degree, Traceability traceable,
                               std::string formula)
    : id_(std::move(id)),
      f_(std::make_shared<const Evaluator>(std::move(f))),
      degree_(degree),
      traceable_(traceable),
      formula_(std::move(formula)) {}

CenterFunction CenterFunction::relabeled(std::string id) const {
  CenterFunction copy = *this;
  copy.id_ = std::move(id);
  return copy;
}

CyclicFactor CyclicFactor::constant(const Real& v) {
  std::ostringstream os;
  os << v;
  return {[v](const Real&, const Real&, const Real&) { return v; }, 0, os.str()};
}

bool sampled_cyclic_factor_ok(const CyclicFactor& w, std::size_t n_samples, std::uint64_t seed) {
  using std::abs;
  Rng rng(seed);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const SideLengths s = sample_scaled_shape(rng);
    const Real x = w(s.a, s.b, s.c);
    const Real y = w(s.b, s.c, s.a);
    const Real z = w(s.c, s.a, s.b);
    const Real m = abs_max3(x, y, z);
    if (!(m > 0) || !is_finite(m)) return false;
    if (abs(x - y) > Real(1e-10) * m || abs(x - z) > Real(1e-10) * m) return false;
  }
  return true;
}

Real center_scale(const CenterFunction& psi, const SideLengths& s) {
  if (psi.degree()) return ipow(s.longest(), *psi.degree());
  return abs_max3(psi(s.a, s.b, s.c), psi(s.b, s.c, s.a), psi(s.c, s.a, s.b));
}

Trilinear center_trilinears(const CenterFunction& psi, const SideLengths& s) {
  const Trilinear t{psi(s.a, s.b, s.c), psi(s.b, s.c, s.a), psi(s.c, s.a, s.b)};
  if (!is_finite(t.x1) || !is_finite(t.x2) || !is_finite(t.x3))
    throw PoleError("center '" + psi.id() + "' evaluates to a non-finite value");
  const Real m = abs_max3(t.x1, t.x2, t.x3);
  const Real scale = psi.degree() ? center_scale(psi, s) : m;
  if (!(m > Real(kEpsRel) * scale) || m == 0)
    throw DegenerateCenterError("center '" + psi.id() + "' has all-zero trilinears for this triangle");
  return t;
}

Barycentric center_barycentrics(const CenterFunction& psi, const SideLengths& s) {
  return trilinear_to_bary(s, center_trilinears(psi, s));
}

Point2 center_point(const CenterFunction& psi, const Triangle& T) {
  const SideLengths s = side_lengths(T);
  return bary_to_point(T, center_barycentrics(psi, s));
}

Real trace(const CenterFunction& psi, const SideLengths& s) {
  return s.a * psi(s.a, s.b, s.c) + s.b * psi(s.b, s.c, s.a) + s.c * psi(s.c, s.a, s.b);
}

CenterFunction normalize(const CenterFunction& psi) {
  ensure_traceable(psi);
  Evaluator f = [psi](const Real& a, const Real& b, const Real& c) {
    using std::abs;
    const Real t0 = a * psi(a, b, c);
    const Real t1 = b * psi(b, c, a);
    const Real t2 = c * psi(c, a, b);
    const Real sum = t0 + t1 + t2;
    if (!(abs(sum) > Real(kEpsRel) * (abs(t0) + abs(t1) + abs(t2))))
      throw PoleError("trace of '" + psi.id() + "' vanishes");
    return psi(a, b, c) / sum;
  };
  return CenterFunction("norm(" + psi.id() + ")", std::move(f), -1, Traceability::Yes,
                        "(" + psi.formula() + ")/trace");
}

TraceabilityReport traceability_report(const CenterFunction& psi, std::size_t n_samples, std::uint64_t seed) {
  using std::abs;
  TraceabilityReport rep;
  Rng rng(seed);
  rep.min_abs = Real(std::numeric_limits<double>::infinity());

  struct Probe {
    SideLengths s;
    Real v;
  };
  std::optional<Probe> best_pos, best_neg;

  auto visit = [&](const SideLengths& s) {
    Real v;
    try {
      v = trace(psi, s);
    } catch (const PoleError&) {
      return;
    }
    if (!is_finite(v)) return;
    ++rep.evaluated;
    const Real av = abs(v);
    if (av < rep.min_abs) {
      rep.min_abs = av;
      rep.argmin = s;
    }
    rep.max_abs = std::max(rep.max_abs, av);
    if (v > 0 && (!best_pos || av < abs(best_pos->v))) best_pos = Probe{s, v};
    if (v < 0 && (!best_neg || av < abs(best_neg->v))) best_neg = Probe{s, v};
  };

  visit({Real(1), Real(1), Real(1)});
  for (std::size_t i = 0; i < n_samples; ++i) visit(sample_shape(rng));

  // A sign change is a zero only if bisection drives |trace| down; a pole
  // blows it up instead.
  if (best_pos && best_neg) {
    SideLengths p = best_pos->s;
    SideLengths q = best_neg->s;
    Real vmid = 0;
    bool pole = false;
    for (int it = 0; it < 80; ++it) {
      const SideLengths m{Real(1), (p.b + q.b) / 2, (p.c + q.c) / 2};
      try {
        vmid = trace(psi, m);
      } catch (const PoleError&) {
        pole = true;
        break;
      }
      if (vmid > 0)
        p = m;
      else
        q = m;
    }
    if (!pole && abs(vmid) < Real(1e-6) * rep.max_abs) {
      rep.sign_change = true;
      const SideLengths m{Real(1), (p.b + q.b) / 2, (p.c + q.c) / 2};
      if (abs(vmid) <= rep.min_abs) {
        rep.min_abs = abs(vmid);
        rep.argmin = m;
      }
    }
  }
  const bool near_zero = !(rep.min_abs > Real(1e-9) * rep.max_abs);
  rep.verdict = (rep.sign_change || near_zero) ? TraceVerdict::NotTraceable : TraceVerdict::LikelyTraceable;
  return rep;
}

CenterFunction isogonal_conjugate(const CenterFunction& psi) {
  Evaluator f = [psi](const Real& a, const Real& b, const Real& c) {
    using std::abs;
    const Real v = psi(a, b, c);
    const Real scale = psi.degree() ? ipow(std::max({a, b, c}), *psi.degree())
                                    : abs_max3(v, psi(b, c, a), psi(c, a, b));
    if (!(abs(v) > Real(kEpsRel) * scale)) throw PoleError("isogonal conjugate of '" + psi.id() + "' has a pole");
    return Real(1) / v;
  };
  std::optional<int> deg;
  if (psi.degree()) deg = -*psi.degree();
  return CenterFunction("inv(" + psi.id() + ")", std::move(f), deg, Traceability::Unknown,
                        "1/(" + psi.formula() + ")");
}

CenterFunction cyclic_affine(const CenterFunction& psi0, const CenterFunction& psi1, const CyclicFactor& w0,
                             const CyclicFactor& w1) {
  const auto d0 = add_degrees(w0.degree, psi0.degree());
  const auto d1 = add_degrees(w1.degree, psi1.degree());
  if (d0 && d1 && *d0 != *d1) {
    std::ostringstream os;
    os << "cyclic-affine combination mixes degrees " << *d0 << " and " << *d1;
    throw DegreeMismatchError(os.str());
  }
  Evaluator f = [psi0, psi1, w0, w1](const Real& a, const Real& b, const Real& c) {
    return w0(a, b, c) * psi0(a, b, c) + w1(a, b, c) * psi1(a, b, c);
  };
  return CenterFunction("cyc(" + psi0.id() + "," + psi1.id() + ")", std::move(f), d0 ? d0 : d1,
                        Traceability::Unknown,
                        "(" + w0.name + ")*(" + psi0.formula() + ") + (" + w1.name + ")*(" + psi1.formula() + ")");
}

CenterFunction constant_affine(const CenterFunction& psi0, const CenterFunction& psi1, const Real& l0,
                               const Real& l1) {
  if (l0 == 0 || l1 == 0) throw ZeroCoefficientError("constant-affine coefficients must be nonzero");
  if (psi0.degree() && psi1.degree() && *psi0.degree() != *psi1.degree()) {
    std::ostringstream os;
    os << "constant-affine combination of degrees " << *psi0.degree() << " and " << *psi1.degree();
    throw DegreeMismatchError(os.str());
  }
  Evaluator f = [psi0, psi1, l0, l1](const Real& a, const Real& b, const Real& c) {
    return l0 * psi0(a, b, c) + l1 * psi1(a, b, c);
  };
  std::ostringstream id, formula;
  id << "span(" << psi0.id() << "," << psi1.id() << ";" << l0 << ":" << l1 << ")";
  formula << l0 << "*(" << psi0.formula() << ") + " << l1 << "*(" << psi1.formula() << ")";
  return CenterFunction(id.str(), std::move(f), psi0.degree() ? psi0.degree() : psi1.degree(),
                        Traceability::Unknown, formula.str());
}

CenterFunction scaled_center(const CenterFunction& psi, const Real& sigma) {
  const CenterFunction n = normalize(psi);
  Evaluator f = [n, sigma](const Real& a, const Real& b, const Real& c) {
    return (Real(1) - sigma) * n(a, b, c) + sigma / (Real(3) * a);
  };
  std::ostringstream id;
  id << psi.id() << "@sigma=" << sigma;
  // The trace of the combination is (1 - sigma) + sigma = 1.
  return CenterFunction(id.str(), std::move(f), -1, Traceability::Yes,
                        "(1-s)*norm(" + psi.formula() + ") + s/(3a)");
}

std::pair<Real, Real> cyclic_coefficients_of_collinear(const CenterFunction& psi0, const CenterFunction& psi1,
                                                       const CenterFunction& psi2, const SideLengths& s) {
  using std::abs;
  const Real p0a = psi0(s.a, s.b, s.c), p0b = psi0(s.b, s.c, s.a), p0c = psi0(s.c, s.a, s.b);
  const Real p1a = psi1(s.a, s.b, s.c), p1b = psi1(s.b, s.c, s.a), p1c = psi1(s.c, s.a, s.b);
  const Real p2a = psi2(s.a, s.b, s.c), p2b = psi2(s.b, s.c, s.a);
  const Real D = p0a * p1b - p0b * p1a;
  if (!(abs(D) > Real(kEpsRel) * abs_max3(p0a, p0b, p0c) * abs_max3(p1a, p1b, p1c)))
    throw RankDeficiencyError("parent centers are not essentially different at this triangle");
  return {(p2a * p1b - p2b * p1a) / D, (p0a * p2b - p0b * p2a) / D};
}

namespace {

// Distance between the normalized barycentrics relative to their distance
// from the centroid weights; 0 means the centers coincide.
Real coincidence_ratio(const CenterFunction& psi0, const CenterFunction& psi1, const SideLengths& s) {
  using std::sqrt;
  auto unit = [&](const CenterFunction& psi) {
    const Barycentric b = center_barycentrics(psi, s);
    const Real sum = b.sum();
    return Triple{b.l1 / sum, b.l2 / sum, b.l3 / sum};
  };
  const Triple p = unit(psi0);
  const Triple q = unit(psi1);
  const Real third = Real(1) / Real(3);
  Real dpq = 0, dp = 0, dq = 0;
  for (int i = 0; i < 3; ++i) {
    dpq += (p[i] - q[i]) * (p[i] - q[i]);
    dp += (p[i] - third) * (p[i] - third);
    dq += (q[i] - third) * (q[i] - third);
  }
  const Real den = sqrt(dp) + sqrt(dq);
  if (!(den > Real(1e-14)) || !is_finite(den)) return 1;
  return sqrt(dpq) / den;
}

}  // namespace

EssentialDifferenceReport essential_difference_report(const CenterFunction& psi0, const CenterFunction& psi1,
                                                      std::size_t n_samples, std::uint64_t seed) {
  using std::sqrt;
  Rng rng(seed);
  auto ratio = [&](const Real& b, const Real& c) -> Real {
    try {
      return coincidence_ratio(psi0, psi1, {Real(1), b, c});
    } catch (const MathError&) {
      return 1;
    }
  };
  std::vector<std::pair<Real, SideLengths>> best;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const SideLengths s = sample_shape(rng);
    best.emplace_back(ratio(s.b, s.c), s);
  }
  const std::size_t keep = std::min<std::size_t>(8, best.size());
  std::partial_sort(best.begin(), best.begin() + keep, best.end(),
                    [](const auto& x, const auto& y) { return x.first < y.first; });
  EssentialDifferenceReport rep;
  rep.min_ratio = Real(2);
  for (std::size_t i = 0; i < keep; ++i) {
    auto [b, c] = refine_shape(ratio, best[i].second.b, best[i].second.c, Real(0.02), 4000);
    const Real r = ratio(b, c);
    const Real off = sqrt((b - 1) * (b - 1) + (c - 1) * (c - 1));
    if (off < Real(1e-3)) continue;
    if (r < rep.min_ratio) {
      rep.min_ratio = r;
      rep.witness = {Real(1), b, c};
    }
  }
  if (rep.min_ratio < Real(1e-7)) rep.verdict = DifferenceVerdict::NotDifferent;
  return rep;
}

Real bisymmetry_residual(const CenterFunction& psi, std::size_t n_samples, std::uint64_t seed) {
  using std::abs;
  Rng rng(seed);
  Real worst = 0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const SideLengths s = sample_scaled_shape(rng);
    try {
      const Real x = psi(s.a, s.b, s.c);
      const Real y = psi(s.a, s.c, s.b);
      const Real m = std::max(Real(abs(x)), Real(abs(y)));
      if (m > 0) worst = std::max(worst, Real(abs(x - y) / m));
    } catch (const PoleError&) {
    }
  }
  return worst;
}

Real homogeneity_residual(const CenterFunction& psi, std::size_t n_samples, std::uint64_t seed) {
  using std::abs;
  if (!psi.degree()) return nan_real();
  Rng rng(seed);
  Real worst = 0;
  const Real factors[] = {Real(0.5), Real(2), Real(7)};
  for (std::size_t i = 0; i < n_samples; ++i) {
    const SideLengths s = sample_scaled_shape(rng);
    for (const Real& k : factors) {
      try {
        const Real lhs = psi(k * s.a, k * s.b, k * s.c);
        const Real rhs = ipow(k, *psi.degree()) * psi(s.a, s.b, s.c);
        const Real m = std::max(Real(abs(lhs)), Real(abs(rhs)));
        if (m > 0) worst = std::max(worst, Real(abs(lhs - rhs) / m));
      } catch (const PoleError&) {
      }
    }
  }
  return worst;
}

}  // namespace tricenter
