#include "troptoric/fan.hpp"

#include <algorithm>
#include <sstream>

#include "troptoric/errors.hpp"

namespace troptoric {

namespace {

std::string str(LatticeVector v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void require_primitive(LatticeVector v) {
  if (!is_primitive(v)) throw PreconditionError("cone generator " + str(v) + " is not primitive");
}

// Cone generators in counterclockwise order: cross(first, second) > 0.
std::pair<LatticeVector, LatticeVector> ccw_pair(const Cone& c) {
  auto r = c.rays();
  return cross(r[0], r[1]) > 0 ? std::pair{r[0], r[1]} : std::pair{r[1], r[0]};
}

bool strictly_inside(const std::pair<LatticeVector, LatticeVector>& arc, LatticeVector d) {
  return cross(arc.first, d) > 0 && cross(d, arc.second) > 0;
}

// d lies in the half-open arc [first, second).
bool in_half_open(const std::pair<LatticeVector, LatticeVector>& arc, LatticeVector d) {
  const bool along_first = cross(arc.first, d) == 0 && dot(arc.first, d) > 0;
  return along_first || strictly_inside(arc, d);
}

}  // namespace

Cone::Cone(LatticeVector ray) : rays_{ray} { require_primitive(ray); }

Cone::Cone(LatticeVector first, LatticeVector second) : rays_{first, second} {
  require_primitive(first);
  require_primitive(second);
  if (cross(first, second) == 0) {
    throw PreconditionError("cone(" + str(first) + ", " + str(second) +
                            ") is not strictly convex");
  }
}

bool Cone::has_ray(LatticeVector r) const {
  return std::find(rays_.begin(), rays_.end(), r) != rays_.end();
}

bool operator==(const Cone& a, const Cone& b) {
  if (a.dim() != b.dim()) return false;
  return std::all_of(a.rays_.begin(), a.rays_.end(), [&](LatticeVector r) { return b.has_ray(r); });
}

bool is_smooth(const Cone& c) {
  auto r = c.rays();
  switch (r.size()) {
    case 0:
      return true;
    case 1:
      return is_primitive(r[0]);
    default:
      return cross(r[0], r[1]) == 1 || cross(r[0], r[1]) == -1;
  }
}

std::array<LatticeVector, 2> dual_frame(const Cone& c) {
  if (c.dim() != 2 || !is_smooth(c)) {
    throw PreconditionError("dual_frame: needs a smooth 2-dimensional cone");
  }
  const LatticeVector u1 = c.rays()[0];
  const LatticeVector u2 = c.rays()[1];
  const std::int64_t d = cross(u1, u2);  // +-1, so the inverse is integral
  return {LatticeVector{u2.y * d, -u2.x * d}, LatticeVector{-u1.y * d, u1.x * d}};
}

Fan::Fan(const std::vector<Cone>& max_cones) : cones_(max_cones) {
  for (const auto& c : cones_) {
    for (LatticeVector r : c.rays()) {
      if (std::find(rays_.begin(), rays_.end(), r) == rays_.end()) rays_.push_back(r);
    }
  }
  validate();
}

Fan::Fan(std::vector<LatticeVector> rays, std::vector<Cone> cones)
    : rays_(std::move(rays)), cones_(std::move(cones)) {
  validate();
}

Fan Fan::from_indexed(std::vector<LatticeVector> rays,
                      const std::vector<std::vector<std::size_t>>& cones) {
  std::vector<Cone> built;
  std::vector<bool> used(rays.size(), false);
  for (const auto& idx : cones) {
    for (std::size_t i : idx) {
      if (i >= rays.size()) throw PreconditionError("cone refers to a missing ray index");
      used[i] = true;
    }
    if (idx.size() == 1) {
      built.emplace_back(rays[idx[0]]);
    } else if (idx.size() == 2) {
      built.emplace_back(rays[idx[0]], rays[idx[1]]);
    } else {
      throw PreconditionError("maximal cones must have 1 or 2 rays");
    }
  }
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (!used[i]) built.emplace_back(rays[i]);
  }
  return Fan(std::move(rays), std::move(built));
}

void Fan::validate() const {
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    require_primitive(rays_[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (rays_[i] == rays_[j]) throw PreconditionError("duplicate ray " + str(rays_[i]));
    }
  }
  std::vector<std::pair<LatticeVector, LatticeVector>> arcs;
  for (const auto& c : cones_) {
    if (c.dim() == 0) throw PreconditionError("the origin is never a maximal cone");
    if (c.dim() == 2) arcs.push_back(ccw_pair(c));
  }
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    if (cones_[i].dim() != 1) continue;
    const LatticeVector r = cones_[i].rays()[0];
    for (std::size_t j = 0; j < cones_.size(); ++j) {
      if (j != i && cones_[j].has_ray(r)) {
        throw PreconditionError("ray " + str(r) + " is listed as a maximal cone but is a face");
      }
    }
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (LatticeVector r : rays_) {
      if (strictly_inside(arcs[i], r)) {
        throw PreconditionError("ray " + str(r) + " lies in the interior of a cone");
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (in_half_open(arcs[i], arcs[j].first) || in_half_open(arcs[j], arcs[i].first)) {
        throw PreconditionError("two maximal cones overlap in their interiors");
      }
    }
  }
}

std::optional<std::size_t> Fan::ray_index(LatticeVector r) const {
  auto it = std::find(rays_.begin(), rays_.end(), r);
  if (it == rays_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - rays_.begin());
}

std::size_t Fan::require_ray(LatticeVector r) const {
  auto i = ray_index(r);
  if (!i) throw PreconditionError(str(r) + " is not a ray of the fan");
  return *i;
}

std::vector<std::size_t> Fan::cone_ray_indices(std::size_t cone) const {
  std::vector<std::size_t> out;
  for (LatticeVector r : cones_.at(cone).rays()) out.push_back(*ray_index(r));
  return out;
}

std::optional<std::size_t> first_non_smooth_cone(const Fan& f) {
  for (std::size_t i = 0; i < f.max_cones().size(); ++i) {
    if (!is_smooth(f.max_cones()[i])) return i;
  }
  return std::nullopt;
}

bool is_smooth(const Fan& f) { return !first_non_smooth_cone(f).has_value(); }

std::vector<LatticeVector> rays_by_angle(const Fan& f) {
  std::vector<LatticeVector> sorted = f.rays();
  std::sort(sorted.begin(), sorted.end(), angle_less);
  return sorted;
}

bool is_complete(const Fan& f) {
  const auto sorted = rays_by_angle(f);
  if (sorted.size() < 3) return false;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const LatticeVector a = sorted[i];
    const LatticeVector b = sorted[(i + 1) % sorted.size()];
    if (cross(a, b) <= 0) return false;
    const Cone spanning(a, b);
    if (std::find(f.max_cones().begin(), f.max_cones().end(), spanning) == f.max_cones().end()) {
      return false;
    }
  }
  return true;
}

std::pair<LatticeVector, LatticeVector> adjacent_rays(const Fan& f, LatticeVector r) {
  f.require_ray(r);
  if (!is_complete(f)) throw PreconditionError("adjacent_rays: fan is not complete");
  const auto sorted = rays_by_angle(f);
  const std::size_t n = sorted.size();
  const std::size_t i =
      static_cast<std::size_t>(std::find(sorted.begin(), sorted.end(), r) - sorted.begin());
  return {sorted[(i + 1) % n], sorted[(i + n - 1) % n]};
}

Fan blow_up(const Fan& f, const Cone& c) {
  const auto& cones = f.max_cones();
  auto it = std::find(cones.begin(), cones.end(), c);
  if (it == cones.end()) throw PreconditionError("blow_up: cone is not a maximal cone of the fan");
  return blow_up(f, static_cast<std::size_t>(it - cones.begin()));
}

Fan blow_up(const Fan& f, std::size_t cone_index) {
  if (cone_index >= f.max_cones().size()) {
    throw PreconditionError("blow_up: cone index out of range");
  }
  const Cone& c = f.max_cones()[cone_index];
  if (c.dim() != 2) throw PreconditionError("blow_up: cone is not 2-dimensional");
  if (!is_smooth(c)) throw PreconditionError("blow_up: cone is not smooth");
  const LatticeVector u1 = c.rays()[0];
  const LatticeVector u2 = c.rays()[1];
  const LatticeVector u = u1 + u2;

  std::vector<LatticeVector> rays = f.rays();
  rays.push_back(u);
  std::vector<std::vector<std::size_t>> indexed;
  for (std::size_t i = 0; i < f.max_cones().size(); ++i) {
    if (i == cone_index) {
      const std::size_t a = *f.ray_index(u1);
      const std::size_t b = *f.ray_index(u2);
      indexed.push_back({a, rays.size() - 1});
      indexed.push_back({rays.size() - 1, b});
    } else {
      indexed.push_back(f.cone_ray_indices(i));
    }
  }
  return Fan::from_indexed(std::move(rays), indexed);
}

Fan projective_plane() {
  return Fan::from_indexed({{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}});
}

Fan product_p1_p1() {
  return Fan::from_indexed({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

Fan hirzebruch(int a) {
  if (a < 0) throw PreconditionError("hirzebruch: parameter must be nonnegative");
  return Fan::from_indexed({{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

}  // namespace troptoric
