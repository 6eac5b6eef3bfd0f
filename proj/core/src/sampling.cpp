#include "tricenter/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace tricenter {

bool in_shape_region(const Real& b, const Real& c) {
  using std::abs;
  if (!(b > kShapeLo && b < kShapeHi && c > kShapeLo && c < kShapeHi)) return false;
  return b + c > Real(1 + kShapeMargin) && abs(b - c) < Real(1 - kShapeMargin);
}

Real uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return Real(d(rng));
}

SideLengths sample_shape(Rng& rng) {
  for (;;) {
    const Real b = uniform(rng, kShapeLo, kShapeHi);
    const Real c = uniform(rng, kShapeLo, kShapeHi);
    if (in_shape_region(b, c)) return {Real(1), b, c};
  }
}

Triangle random_triangle(Rng& rng) {
  using std::cos;
  using std::sin;
  const Triangle T = canonical_placement(sample_shape(rng));
  const Real k = uniform(rng, 0.5, 3.0);
  const Real phi = uniform(rng, 0.0, 2.0 * 3.14159265358979323846);
  const Point2 shift{uniform(rng, -5.0, 5.0), uniform(rng, -5.0, 5.0)};
  const Real cp = cos(phi);
  const Real sp = sin(phi);
  auto move = [&](const Point2& p) {
    return Point2{k * (cp * p.x - sp * p.y), k * (sp * p.x + cp * p.y)} + shift;
  };
  return {move(T.A), move(T.B), move(T.C)};
}

Triangle random_non_equilateral_triangle(Rng& rng, double min_dist) {
  using std::abs;
  for (;;) {
    Triangle T = random_triangle(rng);
    const SideLengths s = side_lengths(T);
    const Real L = s.longest();
    const Real spread = std::max({abs(s.a - s.b), abs(s.b - s.c), abs(s.c - s.a)}) / L;
    if (spread > Real(min_dist)) return T;
  }
}

std::pair<Real, Real> refine_shape(const std::function<Real(const Real&, const Real&)>& f, Real b, Real c,
                                   Real step, int max_iter) {
  Real best = f(b, c);
  static const int dirs[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
  for (int it = 0; it < max_iter && step > Real(1e-15); ++it) {
    bool moved = false;
    for (const auto& d : dirs) {
      const Real nb = b + step * d[0];
      const Real nc = c + step * d[1];
      if (!in_shape_region(nb, nc)) continue;
      const Real v = f(nb, nc);
      if (v < best) {
        best = v;
        b = nb;
        c = nc;
        moved = true;
        break;
      }
    }
    if (!moved) step /= 2;
  }
  return {b, c};
}

}  // namespace tricenter
