#pragma once

// Smooth rational cones and fans in N_R = Z^2 (x) R.
//
// A Fan stores its rays in a fixed order (divisor coefficients and JSON
// documents refer to rays by that index) and only its maximal cones. Validity
// (primitive generators, strictly convex cones, pairwise intersections are
// common faces) is checked on construction; smoothness and completeness are
// separate predicates since h0 accepts incomplete fans.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "troptoric/lattice.hpp"

namespace troptoric {

class Cone {
 public:
  /// The origin.
  Cone() = default;
  explicit Cone(LatticeVector ray);
  Cone(LatticeVector first, LatticeVector second);

  std::span<const LatticeVector> rays() const { return rays_; }
  std::size_t dim() const { return rays_.size(); }
  bool has_ray(LatticeVector r) const;

  /// Equality as sets of rays.
  friend bool operator==(const Cone& a, const Cone& b);

 private:
  std::vector<LatticeVector> rays_;
};

/// Rays extend to a Z-basis: |det| = 1 for two rays; primitive otherwise.
bool is_smooth(const Cone& c);

/// Dual frame m_1, m_2 of a smooth 2-dimensional cone:
/// <m_i, e_j> = delta_ij, in the order of c.rays().
std::array<LatticeVector, 2> dual_frame(const Cone& c);

class Fan {
 public:
  /// Rays are collected in order of first appearance.
  explicit Fan(const std::vector<Cone>& max_cones);

  /// Rays in the given order; cones as index lists of length 1 or 2. Rays not
  /// referenced by any cone become 1-dimensional maximal cones.
  static Fan from_indexed(std::vector<LatticeVector> rays,
                          const std::vector<std::vector<std::size_t>>& cones);

  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<Cone>& max_cones() const { return cones_; }
  std::size_t ray_count() const { return rays_.size(); }

  std::optional<std::size_t> ray_index(LatticeVector r) const;
  /// Throws PreconditionError if r is not a ray of the fan.
  std::size_t require_ray(LatticeVector r) const;
  std::vector<std::size_t> cone_ray_indices(std::size_t cone) const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.rays_ == b.rays_ && a.cones_ == b.cones_;
  }

 private:
  Fan(std::vector<LatticeVector> rays, std::vector<Cone> cones);
  void validate() const;

  std::vector<LatticeVector> rays_;
  std::vector<Cone> cones_;
};

/// Index of the first maximal cone that is not smooth, if any.
std::optional<std::size_t> first_non_smooth_cone(const Fan& f);
bool is_smooth(const Fan& f);

/// The maximal cones cover the plane: consecutive rays in angular order each
/// span a maximal cone of angle < pi.
bool is_complete(const Fan& f);

/// Rays in counterclockwise angular order starting from the positive x axis.
std::vector<LatticeVector> rays_by_angle(const Fan& f);

/// The two rays sharing a maximal cone with r: (counterclockwise neighbour,
/// clockwise neighbour). Throws PreconditionError if the fan is not complete
/// or r is not a ray.
std::pair<LatticeVector, LatticeVector> adjacent_rays(const Fan& f, LatticeVector r);

/// Star subdivision of the smooth maximal cone c = cone(u1, u2) at u1 + u2.
/// The new ray is appended to the ray list; the two new cones take c's slot.
Fan blow_up(const Fan& f, const Cone& c);
Fan blow_up(const Fan& f, std::size_t cone_index);

Fan projective_plane();
Fan product_p1_p1();
/// Rays (1,0), (0,1), (-1,a), (0,-1). Requires a >= 0.
Fan hirzebruch(int a);

}  // namespace troptoric
