#pragma once

// Intersection numbers of ray divisors on a smooth complete toric surface and
// the Riemann-Roch inequality
//
//   h0(D) + h0(K - D) >= chi + D (D - K) / 2.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "troptoric/divisor.hpp"
#include "troptoric/fan.hpp"

namespace troptoric {

/// Throws PreconditionError unless the fan is smooth and complete.
void require_smooth_complete(const Fan& f, const char* op);

/// 1 if a maximal cone contains both rays, else 0. Throws PreconditionError
/// for equal rays, unknown rays or a fan that is not smooth and complete.
std::int64_t ray_intersection(const Fan& f, LatticeVector a, LatticeVector b);

/// The integer b with u1 + u2 + b u = 0, where u1, u2 are the rays adjacent to
/// u. The solution is substituted back; a non-integral or inconsistent b is a
/// PreconditionError.
std::int64_t self_intersection(const Fan& f, LatticeVector u);

class IntersectionMatrix {
 public:
  explicit IntersectionMatrix(const Fan& f);

  std::size_t size() const { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<std::int64_t> entries_;
};

/// sum_{rho, rho'} a_rho b_rho' (D_rho . D_rho').
std::int64_t pairing(const ToricDivisor& d, const ToricDivisor& e);
std::int64_t pairing(const IntersectionMatrix& table, const ToricDivisor& d, const ToricDivisor& e);

/// Topological Euler characteristic of the compact surface: 1.
std::int64_t euler_characteristic(const Fan& f);

struct RRReport {
  H0Value h0_D = H0Value::finite(0);
  H0Value h0_K_minus_D = H0Value::finite(0);
  Rational pairing_term;  // D (D - K) / 2
  std::int64_t euler = 1;
  Rational rhs;     // euler + pairing_term
  Rational defect;  // h0(D) + h0(K - D) - rhs
  bool holds = false;
};

/// Throws PreconditionError unless the fan is smooth and complete.
RRReport rr_check(const ToricDivisor& d);
RRReport rr_check(const IntersectionMatrix& table, const ToricDivisor& d);

}  // namespace troptoric
