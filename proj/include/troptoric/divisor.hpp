#pragma once

// Toric divisors sum_rho a_rho D_rho on the toric surface of a fan, their
// polytopes P(D) = { m : <m, e_rho> + a_rho >= 0 for all rho } and h0.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "troptoric/curve.hpp"
#include "troptoric/fan.hpp"
#include "troptoric/lattice.hpp"
#include "troptoric/trop.hpp"

namespace troptoric {

using FanPtr = std::shared_ptr<const Fan>;

inline FanPtr share(Fan f) { return std::make_shared<const Fan>(std::move(f)); }

class ToricDivisor {
 public:
  /// One coefficient per ray of the fan, in ray order.
  ToricDivisor(FanPtr fan, std::vector<std::int64_t> coeffs);

  static ToricDivisor zero(FanPtr fan);
  /// D_rho for the ray with the given index.
  static ToricDivisor ray_divisor(FanPtr fan, std::size_t ray);

  const Fan& fan() const { return *fan_; }
  const FanPtr& fan_ptr() const { return fan_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t operator[](std::size_t ray) const { return coeffs_[ray]; }
  std::int64_t coeff(LatticeVector ray) const { return coeffs_[fan_->require_ray(ray)]; }

  /// Coefficientwise comparison; throws PreconditionError when fans differ.
  bool operator<=(const ToricDivisor& other) const;
  friend bool operator==(const ToricDivisor& a, const ToricDivisor& b) {
    return a.coeffs_ == b.coeffs_ && (a.fan_ == b.fan_ || *a.fan_ == *b.fan_);
  }

  friend ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b);
  friend ToricDivisor operator-(const ToricDivisor& a, const ToricDivisor& b);
  friend ToricDivisor operator*(std::int64_t k, const ToricDivisor& d);

 private:
  FanPtr fan_;
  std::vector<std::int64_t> coeffs_;
};

/// Throws PreconditionError unless both divisors live on the same fan.
void require_same_fan(const ToricDivisor& a, const ToricDivisor& b);

/// div(x^m) = sum_rho <m, e_rho> D_rho.
ToricDivisor principal_divisor(LatticeVector m, FanPtr fan);

/// K = -sum_rho D_rho.
ToricDivisor canonical_divisor(FanPtr fan);

/// m with D - E = div(x^m), if one exists.
std::optional<LatticeVector> linearly_equivalent(const ToricDivisor& d, const ToricDivisor& e);

struct HalfPlane {
  LatticeVector normal;
  std::int64_t offset = 0;

  bool contains(LatticeVector m) const { return dot(m, normal) + offset >= 0; }
  bool contains(const RationalPoint& p) const;
};

class DivisorPolytope {
 public:
  explicit DivisorPolytope(std::vector<HalfPlane> inequalities);

  const std::vector<HalfPlane>& inequalities() const { return inequalities_; }
  /// Counterclockwise; every vertex satisfies all inequalities, two of them
  /// with equality.
  const std::vector<RationalPoint>& vertices() const { return vertices_; }
  /// The recession cone { m : <m, e_rho> >= 0 } is {0}.
  bool bounded() const { return bounded_; }
  bool empty() const { return empty_; }

 private:
  std::vector<HalfPlane> inequalities_;
  std::vector<RationalPoint> vertices_;
  bool bounded_ = false;
  bool empty_ = false;
};

DivisorPolytope polytope(const ToricDivisor& d);

/// Integer points ordered by (y, x), or nullopt when P is nonempty and
/// unbounded.
std::optional<std::vector<LatticeVector>> lattice_points(const DivisorPolytope& p);

class H0Value {
 public:
  static H0Value finite(std::size_t count) { return H0Value(count); }
  static H0Value infinite() { return H0Value(); }

  bool is_finite() const { return count_.has_value(); }
  /// Throws std::logic_error when infinite.
  std::size_t count() const;
  std::string to_string() const;

  friend bool operator==(const H0Value&, const H0Value&) = default;

 private:
  H0Value() = default;
  explicit H0Value(std::size_t c) : count_(c) {}
  std::optional<std::size_t> count_;
};

/// |P(D) cap M|, Infinite when P(D) is nonempty and unbounded. Throws
/// PreconditionError when the fan is not smooth.
H0Value h0(const ToricDivisor& d);

/// min over the exponents of g of <m, e_rho>. Throws PreconditionError for an
/// empty or non-bivariate polynomial.
std::int64_t degree_along_ray(const TropPolynomial& g, LatticeVector ray);

struct SectionDivisor {
  WeightedComplex inner;
  ToricDivisor ray_part;
};

/// div(g) = div(g restricted to R^2) + sum_rho deg(g)_rho D_rho.
SectionDivisor divisor_of_section(FanPtr fan, const TropPolynomial& g);

}  // namespace troptoric
