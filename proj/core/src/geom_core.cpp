#include "tricenter/geom_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tricenter/errors.hpp"

namespace tricenter {

Real norm(const Point2& p) {
  using std::sqrt;
  return sqrt(dot(p, p));
}

Real distance(const Point2& p, const Point2& q) { return norm(p - q); }

bool is_finite(const Point2& p) { return is_finite(p.x) && is_finite(p.y); }

void SideLengths::validate() const {
  if (!(a > 0 && b > 0 && c > 0) || !is_finite(a) || !is_finite(b) || !is_finite(c)) {
    std::ostringstream os;
    os << "side lengths must be positive and finite, got (" << a << ", " << b << ", " << c << ")";
    throw DomainError(os.str());
  }
  if (!(a < b + c && b < c + a && c < a + b)) {
    std::ostringstream os;
    os << "side lengths (" << a << ", " << b << ", " << c << ") violate the triangle inequality";
    throw DomainError(os.str());
  }
}

Real SideLengths::longest() const { return std::max({a, b, c}); }

Triangle Triangle::checked(const Point2& A, const Point2& B, const Point2& C) {
  Triangle T{A, B, C};
  if (!is_finite(A) || !is_finite(B) || !is_finite(C)) throw DomainError("triangle vertex is not finite");
  if (is_degenerate(T)) throw DomainError("triangle vertices are collinear or coincident");
  return T;
}

Real signed_double_area(const Triangle& T) { return cross(T.B - T.A, T.C - T.A); }

Real longest_side(const Triangle& T) {
  return std::max({distance(T.A, T.B), distance(T.B, T.C), distance(T.C, T.A)});
}

bool is_degenerate(const Triangle& T) {
  using std::abs;
  const Real L = longest_side(T);
  return abs(signed_double_area(T)) <= Real(1e-12) * L * L;
}

Point2 centroid(const Triangle& T) { return (T.A + T.B + T.C) / Real(3); }

SideLengths side_lengths(const Triangle& T) {
  return {distance(T.B, T.C), distance(T.C, T.A), distance(T.A, T.B)};
}

Real heron_area(const SideLengths& s) {
  using std::sqrt;
  s.validate();
  const Real rad = (s.a + s.b + s.c) * (-s.a + s.b + s.c) * (s.a - s.b + s.c) * (s.a + s.b - s.c);
  if (!(rad > 0)) throw DomainError("degenerate side-length triple: Heron radicand is not positive");
  return sqrt(rad) / Real(4);
}

Triangle canonical_placement(const SideLengths& s) {
  s.validate();
  const Real area = heron_area(s);
  // side c on the x-axis, C above it
  return {{Real(0), Real(0)},
          {s.c, Real(0)},
          {(-s.a * s.a + s.b * s.b + s.c * s.c) / (Real(2) * s.c), Real(2) * area / s.c}};
}

Point2 bary_to_point(const Triangle& T, const Barycentric& b) {
  using std::abs;
  const Real sum = b.sum();
  const Real scale = std::max({abs(b.l1), abs(b.l2), abs(b.l3)});
  if (!(abs(sum) > Real(1e-12) * scale)) throw ProjectiveError("barycentric weights sum to zero (point at infinity)");
  return (b.l1 * T.A + b.l2 * T.B + b.l3 * T.C) / sum;
}

Barycentric trilinear_to_bary(const SideLengths& s, const Trilinear& t) {
  return {s.a * t.x1, s.b * t.x2, s.c * t.x3};
}

Triple max_normalized(const Triple& v) {
  using std::abs;
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (abs(v[i]) > abs(v[k])) k = i;
  if (v[k] == 0) return v;
  return {v[0] / v[k], v[1] / v[k], v[2] / v[k]};
}

Real projective_distance(const Triple& u, const Triple& v) {
  using std::abs;
  // normalize both by u's dominant component so opposite-sign ties cannot flip
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (abs(u[i]) > abs(u[k])) k = i;
  if (u[k] == 0 || v[k] == 0) return (u == v) ? Real(0) : Real(std::numeric_limits<double>::infinity());
  Real d = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const Real p = u[i] / u[k], q = v[i] / v[k];
    if (!is_finite(p) || !is_finite(q)) return nan_real();
    d = std::max(d, Real(abs(p - q)));
  }
  return d;
}

Real collinearity_residual(const Barycentric& p, const Barycentric& q, const Barycentric& r) {
  const Triple u = max_normalized(as_triple(p));
  const Triple v = max_normalized(as_triple(q));
  const Triple w = max_normalized(as_triple(r));
  return u[0] * (v[1] * w[2] - v[2] * w[1]) - v[0] * (u[1] * w[2] - u[2] * w[1]) +
         w[0] * (u[1] * v[2] - u[2] * v[1]);
}

}  // namespace tricenter
