#include "troptoric/intersect.hpp"

#include <algorithm>

#include "troptoric/errors.hpp"

namespace troptoric {

void require_smooth_complete(const Fan& f, const char* op) {
  if (!is_smooth(f)) throw PreconditionError(std::string(op) + ": the fan is not smooth");
  if (!is_complete(f)) throw PreconditionError(std::string(op) + ": the fan is not complete");
}

std::int64_t ray_intersection(const Fan& f, LatticeVector a, LatticeVector b) {
  require_smooth_complete(f, "ray_intersection");
  f.require_ray(a);
  f.require_ray(b);
  if (a == b) throw PreconditionError("ray_intersection: equal rays, use self_intersection");
  const auto& cones = f.max_cones();
  const bool shared = std::any_of(cones.begin(), cones.end(),
                                  [&](const Cone& c) { return c.has_ray(a) && c.has_ray(b); });
  return shared ? 1 : 0;
}

std::int64_t self_intersection(const Fan& f, LatticeVector u) {
  require_smooth_complete(f, "self_intersection");
  const auto [u1, u2] = adjacent_rays(f, u);
  const LatticeVector s = u1 + u2;
  // u is primitive, so one coordinate is nonzero.
  const std::int64_t num = u.x != 0 ? -s.x : -s.y;
  const std::int64_t den = u.x != 0 ? u.x : u.y;
  if (num % den != 0) throw PreconditionError("self_intersection: no integer solution");
  const std::int64_t b = num / den;
  if (s + b * u != LatticeVector{}) throw PreconditionError("self_intersection: no integer solution");
  return b;
}

IntersectionMatrix::IntersectionMatrix(const Fan& f) : n_(f.ray_count()), entries_(n_ * n_, 0) {
  require_smooth_complete(f, "IntersectionMatrix");
  const auto& rays = f.rays();
  for (std::size_t i = 0; i < n_; ++i) {
    entries_[i * n_ + i] = self_intersection(f, rays[i]);
    for (std::size_t j = i + 1; j < n_; ++j) {
      const std::int64_t v = ray_intersection(f, rays[i], rays[j]);
      entries_[i * n_ + j] = v;
      entries_[j * n_ + i] = v;
    }
  }
}

std::int64_t pairing(const IntersectionMatrix& table, const ToricDivisor& d, const ToricDivisor& e) {
  require_same_fan(d, e);
  if (table.size() != d.coeffs().size()) {
    throw PreconditionError("pairing: intersection table does not match the fan");
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (d[i] == 0) continue;
    for (std::size_t j = 0; j < table.size(); ++j) total += d[i] * e[j] * table(i, j);
  }
  return total;
}

std::int64_t pairing(const ToricDivisor& d, const ToricDivisor& e) {
  require_same_fan(d, e);
  return pairing(IntersectionMatrix(d.fan()), d, e);
}

std::int64_t euler_characteristic(const Fan& f) {
  require_smooth_complete(f, "euler_characteristic");
  return 1;
}

RRReport rr_check(const IntersectionMatrix& table, const ToricDivisor& d) {
  require_smooth_complete(d.fan(), "rr_check");
  const ToricDivisor k = canonical_divisor(d.fan_ptr());
  RRReport r;
  r.h0_D = h0(d);
  r.h0_K_minus_D = h0(k - d);
  r.pairing_term = Rational(static_cast<long>(pairing(table, d, d - k))) / 2;
  r.euler = euler_characteristic(d.fan());
  r.rhs = Rational(static_cast<long>(r.euler)) + r.pairing_term;
  // Complete fans have bounded polytopes, so both counts are finite.
  const Rational lhs(static_cast<unsigned long>(r.h0_D.count() + r.h0_K_minus_D.count()));
  r.defect = lhs - r.rhs;
  r.holds = r.defect >= 0;
  return r;
}

RRReport rr_check(const ToricDivisor& d) {
  require_smooth_complete(d.fan(), "rr_check");
  return rr_check(IntersectionMatrix(d.fan()), d);
}

}  // namespace troptoric
