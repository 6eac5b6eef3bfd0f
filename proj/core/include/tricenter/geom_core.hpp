#pragma once

#include <array>

#include "tricenter/real.hpp"

namespace tricenter {

struct Point2 {
  Real x{0};
  Real y{0};
};

inline Point2 operator+(const Point2& p, const Point2& q) { return {p.x + q.x, p.y + q.y}; }
inline Point2 operator-(const Point2& p, const Point2& q) { return {p.x - q.x, p.y - q.y}; }
inline Point2 operator*(const Real& s, const Point2& p) { return {s * p.x, s * p.y}; }
inline Point2 operator*(const Point2& p, const Real& s) { return {s * p.x, s * p.y}; }
inline Point2 operator/(const Point2& p, const Real& s) { return {p.x / s, p.y / s}; }
inline Real dot(const Point2& p, const Point2& q) { return p.x * q.x + p.y * q.y; }
inline Real cross(const Point2& p, const Point2& q) { return p.x * q.y - p.y * q.x; }
Real norm(const Point2& p);
Real distance(const Point2& p, const Point2& q);
bool is_finite(const Point2& p);

struct SideLengths {
  Real a{1};
  Real b{1};
  Real c{1};

  // Throws DomainError unless all sides are positive and strictly satisfy
  // the triangle inequalities.
  void validate() const;
  Real longest() const;
  SideLengths scaled(const Real& k) const { return {k * a, k * b, k * c}; }
};

struct Triangle {
  Point2 A;
  Point2 B;
  Point2 C;

  // Validating constructor: vertices must be in general position.
  static Triangle checked(const Point2& A, const Point2& B, const Point2& C);
};

struct Barycentric {
  Real l1{0};
  Real l2{0};
  Real l3{0};
  Real sum() const { return l1 + l2 + l3; }
};

struct Trilinear {
  Real x1{0};
  Real x2{0};
  Real x3{0};
};

// Twice the signed area; positive for counter-clockwise vertex order.
Real signed_double_area(const Triangle& T);
Real longest_side(const Triangle& T);
// |det| <= 1e-12 * L^2, L the triangle's own longest side.
bool is_degenerate(const Triangle& T);
Point2 centroid(const Triangle& T);
SideLengths side_lengths(const Triangle& T);

Real heron_area(const SideLengths& s);
Triangle canonical_placement(const SideLengths& s);
Point2 bary_to_point(const Triangle& T, const Barycentric& b);
Barycentric trilinear_to_bary(const SideLengths& s, const Trilinear& t);
Real collinearity_residual(const Barycentric& p, const Barycentric& q, const Barycentric& r);

// Projective helpers shared by the other modules. Triples are scaled so the
// largest-magnitude component becomes +1.
using Triple = std::array<Real, 3>;
Triple max_normalized(const Triple& v);
// Max-norm distance between two projective triples after normalization.
Real projective_distance(const Triple& u, const Triple& v);

inline Triple as_triple(const Barycentric& b) { return {b.l1, b.l2, b.l3}; }
inline Triple as_triple(const Trilinear& t) { return {t.x1, t.x2, t.x3}; }

}  // namespace tricenter
