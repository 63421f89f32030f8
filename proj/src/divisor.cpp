#include "troptoric/divisor.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "troptoric/errors.hpp"

namespace troptoric {

ToricDivisor::ToricDivisor(FanPtr fan, std::vector<std::int64_t> coeffs)
    : fan_(std::move(fan)), coeffs_(std::move(coeffs)) {
  if (!fan_) throw PreconditionError("ToricDivisor: null fan");
  if (coeffs_.size() != fan_->ray_count()) {
    throw PreconditionError("ToricDivisor: need exactly one coefficient per ray");
  }
}

ToricDivisor ToricDivisor::zero(FanPtr fan) {
  const std::size_t n = fan->ray_count();
  return ToricDivisor(std::move(fan), std::vector<std::int64_t>(n, 0));
}

ToricDivisor ToricDivisor::ray_divisor(FanPtr fan, std::size_t ray) {
  std::vector<std::int64_t> c(fan->ray_count(), 0);
  c.at(ray) = 1;
  return ToricDivisor(std::move(fan), std::move(c));
}

void require_same_fan(const ToricDivisor& a, const ToricDivisor& b) {
  if (a.fan_ptr() != b.fan_ptr() && a.fan() != b.fan()) {
    throw PreconditionError("divisors live on different fans");
  }
}

bool ToricDivisor::operator<=(const ToricDivisor& other) const {
  require_same_fan(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] > other.coeffs_[i]) return false;
  }
  return true;
}

ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b) {
  require_same_fan(a, b);
  std::vector<std::int64_t> c(a.coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return ToricDivisor(a.fan_, std::move(c));
}

ToricDivisor operator-(const ToricDivisor& a, const ToricDivisor& b) {
  require_same_fan(a, b);
  std::vector<std::int64_t> c(a.coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
  return ToricDivisor(a.fan_, std::move(c));
}

ToricDivisor operator*(std::int64_t k, const ToricDivisor& d) {
  std::vector<std::int64_t> c(d.coeffs_);
  for (auto& v : c) v *= k;
  return ToricDivisor(d.fan_, std::move(c));
}

ToricDivisor principal_divisor(LatticeVector m, FanPtr fan) {
  std::vector<std::int64_t> c;
  c.reserve(fan->ray_count());
  for (LatticeVector r : fan->rays()) c.push_back(dot(m, r));
  return ToricDivisor(std::move(fan), std::move(c));
}

ToricDivisor canonical_divisor(FanPtr fan) {
  const std::size_t n = fan->ray_count();
  return ToricDivisor(std::move(fan), std::vector<std::int64_t>(n, -1));
}

namespace {

// Returns g = gcd(a, b) and x, y with a x + b y = g.
std::int64_t extended_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  std::int64_t x1 = 0;
  std::int64_t y1 = 0;
  const std::int64_t g = extended_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

std::optional<LatticeVector> linearly_equivalent(const ToricDivisor& d, const ToricDivisor& e) {
  require_same_fan(d, e);
  const auto& rays = d.fan().rays();
  const std::size_t n = rays.size();
  std::vector<std::int64_t> target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = d[i] - e[i];

  auto satisfies = [&](LatticeVector m) {
    for (std::size_t i = 0; i < n; ++i) {
      if (dot(m, rays[i]) != target[i]) return false;
    }
    return true;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int64_t det = cross(rays[i], rays[j]);
      if (det == 0) continue;
      // m is determined by two independent equations; it is integral iff the
      // Cramer numerators divide.
      const std::int64_t nx = target[i] * rays[j].y - rays[i].y * target[j];
      const std::int64_t ny = rays[i].x * target[j] - target[i] * rays[j].x;
      if (nx % det != 0 || ny % det != 0) return std::nullopt;
      const LatticeVector m{nx / det, ny / det};
      return satisfies(m) ? std::optional(m) : std::nullopt;
    }
  }
  // At most two rays, and those are opposite: one equation <m, e> = t, which
  // has integer solutions because e is primitive.
  if (n == 0) return LatticeVector{};
  std::int64_t sx = 0;
  std::int64_t sy = 0;
  extended_gcd(rays[0].x, rays[0].y, sx, sy);
  const LatticeVector m = target[0] * LatticeVector{sx, sy};
  return satisfies(m) ? std::optional(m) : std::nullopt;
}

bool HalfPlane::contains(const RationalPoint& p) const {
  Rational v = dot(normal, p) + Rational(static_cast<long>(offset));
  return v >= 0;
}

DivisorPolytope::DivisorPolytope(std::vector<HalfPlane> inequalities)
    : inequalities_(std::move(inequalities)) {
  const std::size_t n = inequalities_.size();
  bool spanning = false;
  std::vector<RationalPoint> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const HalfPlane& a = inequalities_[i];
      const HalfPlane& b = inequalities_[j];
      const std::int64_t det = cross(a.normal, b.normal);
      if (det == 0) continue;
      spanning = true;
      // <m, n_a> = -a_a and <m, n_b> = -a_b.
      const Rational d(static_cast<long>(det));
      RationalPoint p{
          Rational(static_cast<long>(-a.offset * b.normal.y + a.normal.y * b.offset)) / d,
          Rational(static_cast<long>(-a.normal.x * b.offset + a.offset * b.normal.x)) / d};
      const bool feasible = std::all_of(inequalities_.begin(), inequalities_.end(),
                                        [&](const HalfPlane& h) { return h.contains(p); });
      if (feasible) candidates.push_back(std::move(p));
    }
  }
  vertices_ = convex_hull(std::move(candidates));

  bounded_ = n > 0;
  for (const HalfPlane& h : inequalities_) {
    for (LatticeVector dir : {rotate_ccw(h.normal), -rotate_ccw(h.normal)}) {
      const bool recedes = std::all_of(inequalities_.begin(), inequalities_.end(),
                                       [&](const HalfPlane& g) { return dot(dir, g.normal) >= 0; });
      if (recedes) bounded_ = false;
    }
  }

  if (spanning) {
    // Normals span the plane, so a nonempty P is pointed and has a vertex.
    empty_ = vertices_.empty();
    return;
  }
  // All normals are +-e for one primitive e: an interval for <m, e>.
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;
  if (n > 0) {
    const LatticeVector e = inequalities_[0].normal;
    for (const HalfPlane& h : inequalities_) {
      if (h.normal == e) {
        lower = std::max(lower.value_or(std::numeric_limits<std::int64_t>::min()), -h.offset);
      } else {
        upper = std::min(upper.value_or(std::numeric_limits<std::int64_t>::max()), h.offset);
      }
    }
  }
  empty_ = lower && upper && *lower > *upper;
}

DivisorPolytope polytope(const ToricDivisor& d) {
  std::vector<HalfPlane> hs;
  const auto& rays = d.fan().rays();
  hs.reserve(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) hs.push_back({rays[i], d[i]});
  return DivisorPolytope(std::move(hs));
}

std::optional<std::vector<LatticeVector>> lattice_points(const DivisorPolytope& p) {
  if (p.empty()) return std::vector<LatticeVector>{};
  if (!p.bounded()) return std::nullopt;
  const auto& vs = p.vertices();
  Rational min_x = vs[0].x;
  Rational max_x = vs[0].x;
  Rational min_y = vs[0].y;
  Rational max_y = vs[0].y;
  for (const RationalPoint& v : vs) {
    if (v.x < min_x) min_x = v.x;
    if (v.x > max_x) max_x = v.x;
    if (v.y < min_y) min_y = v.y;
    if (v.y > max_y) max_y = v.y;
  }
  const std::int64_t x0 = ceil_to_int(min_x);
  const std::int64_t x1 = floor_to_int(max_x);
  const std::int64_t y0 = ceil_to_int(min_y);
  const std::int64_t y1 = floor_to_int(max_y);
  std::vector<LatticeVector> out;
  for (std::int64_t y = y0; y <= y1; ++y) {
    for (std::int64_t x = x0; x <= x1; ++x) {
      const LatticeVector m{x, y};
      const bool inside = std::all_of(p.inequalities().begin(), p.inequalities().end(),
                                      [&](const HalfPlane& h) { return h.contains(m); });
      if (inside) out.push_back(m);
    }
  }
  return out;
}

std::size_t H0Value::count() const {
  if (!count_) throw std::logic_error("H0Value::count() on an infinite value");
  return *count_;
}

std::string H0Value::to_string() const {
  return count_ ? std::to_string(*count_) : std::string("infinite");
}

H0Value h0(const ToricDivisor& d) {
  if (!is_smooth(d.fan())) throw PreconditionError("h0: the fan is not smooth");
  const auto points = lattice_points(polytope(d));
  if (!points) return H0Value::infinite();
  return H0Value::finite(points->size());
}

std::int64_t degree_along_ray(const TropPolynomial& g, LatticeVector ray) {
  if (g.dim() != 2) throw PreconditionError("degree_along_ray: polynomial is not bivariate");
  if (g.empty()) throw PreconditionError("degree_along_ray: empty polynomial");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& [m, c] : g.terms()) best = std::min(best, m[0] * ray.x + m[1] * ray.y);
  return best;
}

SectionDivisor divisor_of_section(FanPtr fan, const TropPolynomial& g) {
  std::vector<std::int64_t> degrees;
  for (LatticeVector r : fan->rays()) degrees.push_back(degree_along_ray(g, r));
  return {corner_locus(g), ToricDivisor(std::move(fan), std::move(degrees))};
}

}  // namespace troptoric
