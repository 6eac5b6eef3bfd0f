#include "tricenter/inverse_design.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <regex>
#include <sstream>

#include <boost/math/tools/roots.hpp>

#include "tricenter/errors.hpp"

namespace tricenter {

namespace {

Real half_span() { return Real(1.5) * pi(); }

}  // namespace

bool PolarTarget::active(const Real& t) const {
  using std::abs;
  return t >= domain.lo && t <= domain.hi && abs(r(t)) > rmin;
}

Point2 PolarTarget::point(const Real& t) const {
  using std::cos;
  using std::sin;
  const Real rr = r(t), th = theta(t);
  return {rr * cos(th), rr * sin(th)};
}

Interval default_target_domain() { return {-half_span() + Real(1e-9), half_span() - Real(1e-9)}; }

void validate_target(const PolarTarget& target, std::size_t n_samples) {
  const Real H = half_span();
  if (!(target.domain.lo > -H && target.domain.hi < H && target.domain.lo < target.domain.hi))
    throw DomainError("target domain must lie inside (-3pi/2, 3pi/2)");
  for (std::size_t i = 0; i < n_samples; ++i) {
    const Real t = target.domain.lo + (target.domain.hi - target.domain.lo) * Real(i) / Real(n_samples - 1);
    const Real th = target.theta(t);
    if (!(th > -H && th < H)) {
      std::ostringstream os;
      os << "target angle leaves (-3pi/2, 3pi/2) at t=" << t << " (theta=" << th << ")";
      throw DomainError(os.str());
    }
    if (!is_finite(target.r(t))) throw DomainError("target radius is not finite");
  }
}

PolarTarget rose_target(const Real& amp, int n, Interval domain) {
  if (amp == 0) throw DomainError("rose amplitude must be nonzero");
  std::ostringstream label;
  label << "rose(" << amp << "," << n << ")";
  PolarTarget t{[amp, n](const Real& s) {
                  using std::cos;
                  return amp * cos(Real(n) * s);
                },
                [](const Real& s) { return s; }, domain, Real(0.05), label.str()};
  validate_target(t);
  return t;
}

PolarTarget tabulated_target(std::vector<std::array<Real, 3>> rows, std::string label) {
  if (rows.size() < 2) throw DomainError("tabulated target needs at least two rows");
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i][0] > rows[i - 1][0])) throw DomainError("tabulated target parameters must increase strictly");
  auto table = std::make_shared<const std::vector<std::array<Real, 3>>>(std::move(rows));
  auto interp = [table](std::size_t col) {
    return [table, col](const Real& t) {
      const auto& v = *table;
      if (t < v.front()[0] || t > v.back()[0]) throw DomainError("parameter outside the tabulated target");
      auto it = std::upper_bound(v.begin(), v.end(), t, [](const Real& x, const auto& row) { return x < row[0]; });
      if (it == v.end()) return v.back()[col];
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const Real w = (t - lo[0]) / (hi[0] - lo[0]);
      return lo[col] * (1 - w) + hi[col] * w;
    };
  };
  PolarTarget t{interp(1), interp(2), {table->front()[0], table->back()[0]}, Real(0.05), std::move(label)};
  validate_target(t);
  return t;
}

PolarTarget load_tabulated_target(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open target table '" + path + "'");
  std::vector<std::array<Real, 3>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream is(line);
    std::vector<double> vals;
    double v;
    while (is >> v) vals.push_back(v);
    if (!is.eof()) throw ConfigError(path + ":" + std::to_string(lineno) + ": not a number");
    if (vals.empty()) continue;
    if (vals.size() != 3)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 't r theta', got " +
                        std::to_string(vals.size()) + " values");
    rows.push_back({Real(vals[0]), Real(vals[1]), Real(vals[2])});
  }
  return tabulated_target(std::move(rows), path);
}

PolarTarget parse_target(const std::string& spec) {
  static const std::regex rose(R"(\s*rose\(\s*([-+0-9.eE]+)\s*,\s*([-+]?[0-9]+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(spec, m, rose)) return rose_target(Real(std::stod(m[1].str())), std::stoi(m[2].str()));
  return load_tabulated_target(spec);
}

Triple polar_triple(const Real& r, const Real& theta) {
  using std::cos;
  using std::sin;
  const Real c = cos(theta / 3), s = sin(theta / 3);
  return {1 + r * (c + sqrt3() * s), 1 + r * (c - sqrt3() * s), 1 - 2 * r * c};
}

TriangleFamily family_from_target(const PolarTarget& target) {
  return TriangleFamily("target:" + target.label,
                        [target](const Real& t) { return polar_triple(target.r(t), target.theta(t)); },
                        target.domain);
}

TriangleFamily rose_family(const Real& amp, int n) {
  if (amp == 0) throw DomainError("rose amplitude must be nonzero");
  std::ostringstream label;
  label << "rose(" << amp << "," << n << ")";
  return TriangleFamily(label.str(),
                        [amp, n](const Real& t) {
                          using std::cos;
                          using std::sin;
                          const Real r = amp * cos(Real(n) * t);
                          const Real c = cos(t / 3), s = sin(t / 3);
                          return Triple{1 + r * (c + sqrt3() * s), 1 + r * (c - sqrt3() * s), 1 - 2 * r * c};
                        },
                        default_target_domain());
}

SigmaTau sigma_tau_from_target(const PolarTarget& target) {
  SigmaTau out;
  out.sigma = [target](const Real& t) {
    using std::cos;
    using std::sin;
    const Real th = target.theta(t);
    return -target.r(t) * (cos(th / 3) + sqrt3() * sin(th / 3));
  };
  out.tau = [target](const Real& t) {
    using std::abs;
    using std::cos;
    using std::sin;
    const Real th = target.theta(t);
    const Real den = -1 + 2 * cos(2 * th / 3);
    if (!(abs(den) > Real(1e-9))) {
      std::ostringstream os;
      os << "tau branch pole at t=" << t << " (theta=" << th << ")";
      throw BranchPoleError(os.str(), to_double(t));
    }
    return (3 + (3 - 2 * sqrt3() * sin(2 * th / 3)) / den) / 6;
  };
  return out;
}

std::vector<Real> branch_poles(const PolarTarget& target, const Grid& grid) {
  using std::abs;
  using std::cos;
  auto den = [&](const Real& t) { return -1 + 2 * cos(2 * target.theta(t) / 3); };
  std::vector<Real> out;
  Real t0 = grid.at(0), d0 = den(t0);
  if (!(abs(d0) > Real(1e-9))) out.push_back(t0);
  for (std::size_t i = 1; i < grid.n; ++i) {
    const Real t1 = grid.at(i), d1 = den(t1);
    if (!(abs(d1) > Real(1e-9))) {
      out.push_back(t1);
    } else if (abs(d0) > Real(1e-9) && (d0 < 0) != (d1 < 0)) {
      std::uintmax_t iters = 100;
      const auto [lo, hi] = boost::math::tools::toms748_solve(den, t0, t1, d0, d1,
                                                              boost::math::tools::eps_tolerance<Real>(), iters);
      out.push_back((lo + hi) / 2);
    }
    t0 = t1;
    d0 = d1;
  }
  return out;
}

ReproductionReport verify_target_reproduction(const CenterFunction& psi, const PolarTarget& target, const Triangle& T,
                                              const Grid& grid, Registration reg) {
  const ShearFrame frame = shear_frame(T, psi);
  if (reg == Registration::Auto)
    reg = frame_conditions(frame).pass(Real(1e-9)) ? Registration::Similarity : Registration::Affine;

  ReproductionReport rep;
  rep.registration = reg;
  rep.curve = trace_center(T, psi, family_from_target(target), grid);
  const Point2 X2 = centroid(T);

  std::vector<Point2> src{Point2{}}, dst{X2};
  Real scale = 0;
  std::size_t far = 0;
  Real far_r = -1;
  for (const auto& s : rep.curve.samples) {
    if (s.flag != SampleFlag::Ok || !target.active(s.t)) {
      ++rep.skipped;
      continue;
    }
    src.push_back(target.point(s.t));
    dst.push_back(s.p);
    scale = std::max(scale, distance(s.p, X2));
    using std::abs;
    if (abs(target.r(s.t)) > far_r) {
      far_r = abs(target.r(s.t));
      far = src.size() - 1;
    }
  }
  rep.used = src.size() - 1;
  if (rep.used == 0) throw AllPoledError("no usable target samples");

  Real worst = 0;
  if (reg == Registration::Affine) {
    for (std::size_t i = 1; i < src.size(); ++i) {
      const Point2 q = X2 + src[i].x * frame.Vx + sqrt3() * src[i].y * frame.Vy;
      worst = std::max(worst, distance(q, dst[i]));
    }
  } else {
    // anchors: target origin <-> centroid, and the sample of largest |r|
    worst = similarity_residual(src, dst, 0, far);
  }
  rep.residual = worst / scale;
  return rep;
}

}  // namespace tricenter
