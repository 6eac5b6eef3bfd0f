#include "tricenter/families.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/tools/minima.hpp>

#include "tricenter/errors.hpp"

namespace tricenter {

namespace {

constexpr double kProj = 1e-12;

Real abs_max(const Triple& v) {
  using std::abs;
  return std::max({Real(abs(v[0])), Real(abs(v[1])), Real(abs(v[2]))});
}

Real spread(const Triple& v) {
  using std::abs;
  return std::max({Real(abs(v[0] - v[1])), Real(abs(v[1] - v[2])), Real(abs(v[2] - v[0]))});
}

std::vector<Real> merge_poles(std::vector<Real> a, const std::vector<Real>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Real eval_polynomial(const Polynomial& p, const Real& t) {
  Real r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * t + *it;
  return r;
}

Triple concat_triples(const Triple& u, const Triple& v) {
  return {u[0] * v[0] + u[1] * v[2] + u[2] * v[1], u[0] * v[1] + u[1] * v[0] + u[2] * v[2],
          u[0] * v[2] + u[1] * v[1] + u[2] * v[0]};
}

Triple inverse_triple(const Triple& u) {
  return {u[0] * u[0] - u[1] * u[2], u[2] * u[2] - u[0] * u[1], u[1] * u[1] - u[2] * u[0]};
}

TriangleFamily::TriangleFamily(std::string label, Generator gen, Interval domain, std::vector<Real> poles)
    : label_(std::move(label)),
      gen_(std::make_shared<const Generator>(std::move(gen))),
      domain_(domain),
      poles_(std::move(poles)) {}

bool TriangleFamily::near_pole(const Real& t, const Real& radius) const {
  using std::abs;
  return std::any_of(poles_.begin(), poles_.end(), [&](const Real& p) { return abs(t - p) < radius; });
}

TriangleFamily TriangleFamily::with_coefficients(std::array<Polynomial, 3> c) const {
  TriangleFamily copy = *this;
  copy.coeffs_ = std::move(c);
  return copy;
}

TriangleFamily validated(TriangleFamily F, std::size_t n_samples) {
  using std::abs;
  const Interval d = F.domain();
  bool witnessed_spread = false;
  std::vector<Real> poles;
  Real prev_t = 0, prev_sum = 0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const Real t = d.lo + (d.hi - d.lo) * Real(i) / Real(n_samples - 1);
    const Triple v = F(t);
    const Real sum = v[0] + v[1] + v[2];
    const Real m = abs_max(v);
    if (!is_finite(sum)) throw DomainError("family '" + F.label() + "' is not finite on its domain");
    if (!(abs(sum) > Real(kProj) * m)) {
      std::ostringstream os;
      os << "family '" << F.label() << "' has vanishing weight sum at t=" << t;
      throw DomainError(os.str());
    }
    if (spread(v) > Real(1e-9) * m) witnessed_spread = true;
    if (i > 0 && (sum > 0) != (prev_sum > 0)) {
      // sign change of the weight sum: locate the pole by bisection
      Real lo = prev_t, hi = t, slo = prev_sum;
      for (int it = 0; it < 100; ++it) {
        const Real mid = (lo + hi) / 2;
        const Triple w = F(mid);
        const Real s = w[0] + w[1] + w[2];
        if ((s > 0) == (slo > 0)) {
          lo = mid;
          slo = s;
        } else {
          hi = mid;
        }
      }
      poles.push_back((lo + hi) / 2);
    }
    prev_t = t;
    prev_sum = sum;
  }
  if (!witnessed_spread)
    throw DomainError("family '" + F.label() + "' has identical components everywhere on its domain");
  if (poles.empty()) return F;
  TriangleFamily out(F.label(), [F](const Real& t) { return F(t); }, F.domain(), merge_poles(F.poles(), poles));
  if (F.coefficients()) out = out.with_coefficients(*F.coefficients());
  return out;
}

TriangleFamily make_family(const std::string& label, Generator gen, Interval domain) {
  return validated(TriangleFamily(label, std::move(gen), domain));
}

TriangleFamily builtin(const std::string& label) {
  if (label == "identity")
    return validated(TriangleFamily(label, [](const Real&) { return Triple{1, 0, 0}; }));
  if (label == "scaling")
    return validated(
        TriangleFamily(label, [](const Real& t) { return Triple{1 + 2 * t, 1 - t, 1 - t}; }));
  if (label == "aliquot")
    return validated(TriangleFamily(label, [](const Real& t) { return Triple{0, 1 - t, t}; }));
  if (label == "nedian")
    return validated(TriangleFamily(
        label, [](const Real& t) { return Triple{(1 - t) * t, t * t, (1 - t) * (1 - t)}; }));
  throw UnknownLabelError("unknown family label '" + label + "' (expected identity, scaling, aliquot, nedian)");
}

TriangleFamily polynomial_family(const std::string& label, const std::array<Polynomial, 3>& coeffs) {
  TriangleFamily F(label, [coeffs](const Real& t) {
    return Triple{eval_polynomial(coeffs[0], t), eval_polynomial(coeffs[1], t), eval_polynomial(coeffs[2], t)};
  });
  return validated(F.with_coefficients(coeffs));
}

TriangleFamily parse_polynomial_family(const std::string& text) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : text) {
    if (ch == ';') {
      fields.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(trim(cur));
  if (fields.size() != 4)
    throw ConfigError("polynomial family needs 'label; p1; p2; p3', got " + std::to_string(fields.size()) +
                      " fields");
  std::array<Polynomial, 3> coeffs;
  for (int k = 0; k < 3; ++k) {
    std::string f = fields[k + 1];
    std::replace(f.begin(), f.end(), ',', ' ');
    std::istringstream is(f);
    std::string tok;
    while (is >> tok) {
      try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        coeffs[k].push_back(Real(v));
      } catch (const std::exception&) {
        throw ConfigError("bad coefficient '" + tok + "' in component " + std::to_string(k + 1));
      }
    }
    if (coeffs[k].empty()) coeffs[k].push_back(Real(0));
  }
  if (fields[0].empty()) throw ConfigError("polynomial family label is empty");
  return polynomial_family(fields[0], coeffs);
}

std::string format_polynomial_family(const TriangleFamily& F) {
  if (!F.coefficients()) throw ConfigError("family '" + F.label() + "' has no polynomial form");
  std::ostringstream os;
  os.precision(17);
  os << F.label();
  for (const auto& p : *F.coefficients()) {
    os << ";";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : " ") << to_double(p[i]);
  }
  return os.str();
}

FamilyTriangle family_triangle(const Triangle& T, const TriangleFamily& F, const Real& t) {
  const Triple w = F(t);
  const Triangle out{bary_to_point(T, {w[0], w[1], w[2]}), bary_to_point(T, {w[2], w[0], w[1]}),
                     bary_to_point(T, {w[1], w[2], w[0]})};
  return {out, is_degenerate(out)};
}

TriangleFamily concat(const TriangleFamily& F, const TriangleFamily& G) {
  Interval d{std::max(F.domain().lo, G.domain().lo), std::min(F.domain().hi, G.domain().hi)};
  if (!(d.lo < d.hi)) throw DomainError("families '" + F.label() + "' and '" + G.label() + "' have disjoint domains");
  return TriangleFamily("(" + F.label() + ")o(" + G.label() + ")",
                        [F, G](const Real& t) { return concat_triples(F(t), G(t)); }, d,
                        merge_poles(F.poles(), G.poles()));
}

TriangleFamily inverse(const TriangleFamily& F) {
  return TriangleFamily("inv(" + F.label() + ")", [F](const Real& t) { return inverse_triple(F(t)); }, F.domain(),
                        F.poles());
}

Real delta(const TriangleFamily& F, const Real& t) {
  const Triple v = F(t);
  return 2 * v[0] - v[1] - v[2];
}

DecomposabilityReport decomposability_report(const TriangleFamily& F, std::size_t n_samples) {
  using std::abs;
  DecomposabilityReport rep;
  const Interval d = F.domain();
  std::vector<Real> ts(n_samples), ds(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    ts[i] = d.lo + (d.hi - d.lo) * Real(i) / Real(n_samples - 1);
    ds[i] = delta(F, ts[i]);
  }
  auto rel_delta = [&](const Real& t) {
    const Triple v = F(t);
    const Real m = abs_max(v);
    return m > 0 ? Real(abs(2 * v[0] - v[1] - v[2]) / m) : Real(0);
  };
  std::vector<Real> roots;
  for (std::size_t i = 0; i + 1 < n_samples; ++i) {
    if (ds[i] == 0) {
      roots.push_back(ts[i]);
    } else if ((ds[i] > 0) != (ds[i + 1] > 0) && ds[i + 1] != 0) {
      Real lo = ts[i], hi = ts[i + 1], dlo = ds[i];
      for (int it = 0; it < 100; ++it) {
        const Real mid = (lo + hi) / 2;
        const Real dm = delta(F, mid);
        if ((dm > 0) == (dlo > 0)) {
          lo = mid;
          dlo = dm;
        } else {
          hi = mid;
        }
      }
      roots.push_back((lo + hi) / 2);
    }
    // touching roots (even multiplicity) show up as local minima of |delta|
    if (i > 0 && abs(ds[i]) < abs(ds[i - 1]) && abs(ds[i]) <= abs(ds[i + 1]) && (ds[i - 1] > 0) == (ds[i + 1] > 0)) {
      const auto res = boost::math::tools::brent_find_minima(
          [&](const Real& t) { return rel_delta(t); }, ts[i - 1], ts[i + 1], std::numeric_limits<double>::digits / 2);
      if (res.second < Real(1e-7)) roots.push_back(res.first);
    }
  }
  std::sort(roots.begin(), roots.end());
  for (const Real& r : roots) {
    if (!rep.delta_roots.empty() && abs(r - rep.delta_roots.back()) < Real(1e-6)) continue;
    rep.delta_roots.push_back(r);
  }
  for (const Real& r : rep.delta_roots) {
    const Triple v = F(r);
    if (spread(v) > Real(1e-6) * abs_max(v)) {
      rep.decomposable = false;
      rep.witness = r;
      break;
    }
  }
  return rep;
}

Triple scaling_aliquot_triple(const Real& sigma, const Real& tau) {
  return concat_triples({1 + 2 * sigma, 1 - sigma, 1 - sigma}, {0, 1 - tau, tau});
}

FamilyDecomposition decompose(const TriangleFamily& F) {
  const DecomposabilityReport rep = decomposability_report(F);
  if (!rep.decomposable) {
    std::ostringstream os;
    os << "family '" << F.label() << "' is not decomposable: delta vanishes at t=" << to_double(*rep.witness)
       << " with unequal components";
    throw NonDecomposableError(os.str(), to_double(*rep.witness));
  }
  FamilyDecomposition out;
  out.singular_ts = rep.delta_roots;
  out.sigma = [F](const Real& t) {
    using std::abs;
    const Triple v = F(t);
    const Real dl = 2 * v[0] - v[1] - v[2];
    if (!(abs(dl) > Real(kProj) * abs_max(v))) return Real(0);
    return -dl / (v[0] + v[1] + v[2]);
  };
  out.tau = [F](const Real& t) {
    using std::abs;
    const Triple v = F(t);
    const Real dl = 2 * v[0] - v[1] - v[2];
    if (!(abs(dl) > Real(kProj) * abs_max(v))) return nan_real();
    return (v[0] - v[2]) / dl;
  };
  return out;
}

}  // namespace tricenter
