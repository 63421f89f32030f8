#pragma once

// Rank-2 lattice vectors (elements of N or of the dual lattice M, which share
// one representation) and rational points of the plane.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <vector>

#include "troptoric/errors.hpp"
#include "troptoric/rational.hpp"

namespace troptoric {

struct LatticeVector {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend constexpr auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

  constexpr LatticeVector operator-() const { return {-x, -y}; }
  friend constexpr LatticeVector operator+(LatticeVector a, LatticeVector b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend constexpr LatticeVector operator-(LatticeVector a, LatticeVector b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend constexpr LatticeVector operator*(std::int64_t k, LatticeVector v) {
    return {k * v.x, k * v.y};
  }
  friend std::ostream& operator<<(std::ostream& os, LatticeVector v) {
    return os << '(' << v.x << ',' << v.y << ')';
  }
};

constexpr std::int64_t dot(LatticeVector a, LatticeVector b) { return a.x * b.x + a.y * b.y; }

/// det of the 2x2 matrix with columns a, b.
constexpr std::int64_t cross(LatticeVector a, LatticeVector b) { return a.x * b.y - a.y * b.x; }

/// Number of lattice segments on [0, v]: gcd of the coordinates.
inline std::int64_t lattice_length(LatticeVector v) { return std::gcd(v.x, v.y); }

inline LatticeVector primitive(LatticeVector v) {
  if (v.x == 0 && v.y == 0) throw PreconditionError("primitive: zero vector");
  const std::int64_t g = lattice_length(v);
  return {v.x / g, v.y / g};
}

inline bool is_primitive(LatticeVector v) { return lattice_length(v) == 1; }

/// Counterclockwise rotation by 90 degrees.
constexpr LatticeVector rotate_ccw(LatticeVector v) { return {-v.y, v.x}; }

/// Strict weak order by angle in [0, 2*pi), starting at the positive x axis.
/// Exact: half-plane classification plus a cross-product sign.
inline bool angle_less(LatticeVector a, LatticeVector b) {
  auto upper = [](LatticeVector v) { return v.y > 0 || (v.y == 0 && v.x > 0); };
  const bool ua = upper(a);
  const bool ub = upper(b);
  if (ua != ub) return ua;
  return cross(a, b) > 0;
}

struct RationalPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

inline RationalPoint to_point(LatticeVector v) {
  return {Rational(static_cast<long>(v.x)), Rational(static_cast<long>(v.y))};
}

inline Rational dot(LatticeVector a, const RationalPoint& p) {
  Rational r = Rational(static_cast<long>(a.x)) * p.x + Rational(static_cast<long>(a.y)) * p.y;
  return r;
}

/// Convex hull in counterclockwise order, starting from the lowest-leftmost
/// point. Collinear boundary points are dropped. Works for LatticeVector and
/// RationalPoint alike. Degenerate inputs return 1 or 2 points.
template <class P>
std::vector<P> convex_hull(std::vector<P> pts) {
  auto less = [](const P& a, const P& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; };
  auto eq = [](const P& a, const P& b) { return a.x == b.x && a.y == b.y; };
  std::sort(pts.begin(), pts.end(), less);
  pts.erase(std::unique(pts.begin(), pts.end(), eq), pts.end());
  if (pts.size() <= 2) return pts;
  auto turn = [](const P& o, const P& a, const P& b) {
    using T = decltype(o.x);
    T lhs = (a.x - o.x) * (b.y - o.y);
    T rhs = (a.y - o.y) * (b.x - o.x);
    return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  };
  std::vector<P> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace troptoric
