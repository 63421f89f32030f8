#include "troptoric/sections.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "troptoric/errors.hpp"

namespace troptoric {

SectionModule::SectionModule(ToricDivisor divisor, std::vector<LatticeVector> generators)
    : divisor_(std::move(divisor)), generators_(std::move(generators)) {
  std::vector<LatticeVector> sorted = generators_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("SectionModule: generator exponents must be distinct");
  }
}

TropMonomial SectionModule::generator(std::size_t i) const {
  const LatticeVector m = generators_.at(i);
  return {{m.x, m.y}, TropValue(0L)};
}

SectionModule global_sections(const ToricDivisor& d) {
  if (!is_smooth(d.fan())) throw PreconditionError("global_sections: the fan is not smooth");
  const DivisorPolytope p = polytope(d);
  if (p.empty()) return SectionModule(d, {});
  if (!p.bounded()) {
    throw PreconditionError("global_sections: P(D) is unbounded, the module is not finitely generated");
  }
  Rational min_x = p.vertices()[0].x;
  Rational max_x = min_x;
  Rational min_y = p.vertices()[0].y;
  Rational max_y = min_y;
  for (const RationalPoint& v : p.vertices()) {
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  const ToricDivisor zero = ToricDivisor::zero(d.fan_ptr());
  std::vector<LatticeVector> gens;
  for (std::int64_t y = ceil_to_int(min_y); y <= floor_to_int(max_y); ++y) {
    for (std::int64_t x = ceil_to_int(min_x); x <= floor_to_int(max_x); ++x) {
      const LatticeVector m{x, y};
      if (zero <= principal_divisor(m, d.fan_ptr()) + d) gens.push_back(m);
    }
  }
  return SectionModule(d, std::move(gens));
}

namespace {

void require_plane_point(const Point& x, const char* op) {
  if (x.size() != 2) throw PreconditionError(std::string(op) + ": points must be 2-dimensional");
}

// Slope of each generator at x from exact unit differences, deduplicated.
std::size_t distinct_slopes(const SectionModule& m, const Point& x) {
  std::set<std::pair<Rational, Rational>, std::function<bool(const std::pair<Rational, Rational>&,
                                                             const std::pair<Rational, Rational>&)>>
      slopes([](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : a.second < b.second;
      });
  const Point step_x{x[0] + 1, x[1]};
  const Point step_y{x[0], x[1] + 1};
  for (std::size_t i = 0; i < m.size(); ++i) {
    const TropMonomial s = m.generator(i);
    const Rational here = s.evaluate(x).value();
    Rational dx = s.evaluate(step_x).value() - here;
    Rational dy = s.evaluate(step_y).value() - here;
    slopes.emplace(std::move(dx), std::move(dy));
  }
  return slopes.size();
}

}  // namespace

std::size_t local_slope_count(const SectionModule& m, const Point& x) {
  if (m.empty()) throw PreconditionError("local_slope_count: empty module");
  require_plane_point(x, "local_slope_count");
  const std::size_t count = distinct_slopes(m, x);
  if (count != m.size()) {
    throw std::logic_error("local_slope_count: slope count differs from the generator count");
  }
  return count;
}

std::vector<Point> slope_sample_points(const SectionModule& m) {
  constexpr std::size_t kSamples = 8;
  std::mt19937_64 rng(0x5107e5eedULL);
  std::uniform_int_distribution<long> num(-60, 60);
  std::uniform_int_distribution<long> den(1, 9);
  std::vector<Point> out;
  while (out.size() < kSamples) {
    Point x{Rational(num(rng)) / Rational(den(rng)), Rational(num(rng)) / Rational(den(rng))};
    // On a tie locus <m_i - m_j, x> = 0 of two generators.
    bool on_tie = false;
    for (std::size_t i = 0; i < m.size() && !on_tie; ++i) {
      for (std::size_t j = i + 1; j < m.size() && !on_tie; ++j) {
        on_tie = dot(m.generators()[i] - m.generators()[j], RationalPoint{x[0], x[1]}) == 0;
      }
    }
    if (!on_tie) out.push_back(std::move(x));
  }
  return out;
}

std::size_t h0_a(const SectionModule& m) {
  if (m.empty()) return 0;
  const std::size_t k = m.size();
  for (const Point& x : slope_sample_points(m)) {
    if (distinct_slopes(m, x) != k) {
      throw std::logic_error("h0_a: monomial generators with equal slopes");
    }
  }
  return k;
}

std::size_t h0_b(const SectionModule& m) {
  if (m.empty()) return 0;
  std::size_t best = m.size();
  for (const Point& x : slope_sample_points(m)) best = std::min(best, local_slope_count(m, x));
  return best;
}

TropPolynomial vandermonde_section(const SectionModule& m, std::span<const Point> points) {
  const std::size_t l = m.size();
  if (l < 2) throw PreconditionError("vandermonde_section: needs at least two generators");
  if (points.size() != l - 1) {
    throw PreconditionError("vandermonde_section: expected " + std::to_string(l - 1) +
                            " points, got " + std::to_string(points.size()));
  }
  for (const Point& p : points) require_plane_point(p, "vandermonde_section");

  // values[k][j] = s_j(p_k)
  std::vector<std::vector<TropValue>> values(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    for (std::size_t j = 0; j < l; ++j) values[k].push_back(m.generator(j).evaluate(points[k]));
  }

  TropPolynomial section(2);
  for (std::size_t i = 0; i < l; ++i) {
    TropMatrix minor(l - 1);
    for (std::size_t k = 0; k < l - 1; ++k) {
      for (std::size_t j = 0, col = 0; j < l; ++j) {
        if (j != i) minor(k, col++) = values[k][j];
      }
    }
    const LatticeVector e = m.generators()[i];
    section.add_term({e.x, e.y}, trop_det(minor).value);
  }
  return section;
}

bool passes_through(const TropPolynomial& s, const Point& x) {
  return s.supporting_monomials(x).size() >= 2;
}

bool is_generic_configuration(const SectionModule& m, std::span<const Point> points) {
  const std::size_t gens = m.size();
  const std::size_t npts = points.size();
  if (gens > kMaxGenericityGenerators || npts > kMaxGenericityGenerators) {
    throw PreconditionError("is_generic_configuration: too many generators or points for brute force");
  }
  for (const Point& p : points) require_plane_point(p, "is_generic_configuration");

  std::vector<std::vector<Rational>> value(gens, std::vector<Rational>(npts));
  for (std::size_t i = 0; i < gens; ++i) {
    for (std::size_t p = 0; p < npts; ++p) value[i][p] = m.generator(i).evaluate(points[p]).value();
  }

  const std::size_t max_len = std::min(gens, npts);
  std::vector<std::size_t> cycle;
  std::vector<bool> gen_used(gens, false);
  std::vector<bool> pt_used(npts, false);
  bool vanishes = false;

  // Assign distinct points to the edges of a fixed cycle of generators; the
  // edge t contributes s_{i_t}(x) - s_{i_{t+1}}(x).
  std::function<void(std::size_t, const Rational&)> assign = [&](std::size_t t, const Rational& acc) {
    if (vanishes) return;
    const std::size_t k = cycle.size();
    if (t == k) {
      vanishes = acc == 0;
      return;
    }
    const std::size_t a = cycle[t];
    const std::size_t b = cycle[(t + 1) % k];
    for (std::size_t p = 0; p < npts && !vanishes; ++p) {
      if (pt_used[p]) continue;
      pt_used[p] = true;
      Rational next = acc + value[a][p] - value[b][p];
      assign(t + 1, next);
      pt_used[p] = false;
    }
  };

  // Cycles are enumerated with their smallest generator first; rotating both
  // sequences together leaves the sum unchanged.
  std::function<void()> extend = [&]() {
    if (vanishes) return;
    if (cycle.size() >= 2) assign(0, Rational(0));
    if (cycle.size() == max_len) return;
    for (std::size_t i = cycle.front() + 1; i < gens && !vanishes; ++i) {
      if (gen_used[i]) continue;
      gen_used[i] = true;
      cycle.push_back(i);
      extend();
      cycle.pop_back();
      gen_used[i] = false;
    }
  };

  for (std::size_t first = 0; first < gens && !vanishes && max_len >= 2; ++first) {
    cycle.assign(1, first);
    gen_used.assign(gens, false);
    gen_used[first] = true;
    extend();
  }
  return !vanishes;
}

}  // namespace troptoric
