#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "troptoric/curve.hpp"
#include "troptoric/divisor.hpp"
#include "troptoric/errors.hpp"

using namespace troptoric;

namespace {

TropPolynomial poly(std::initializer_list<std::pair<Exponent, long>> terms) {
  TropPolynomial g(2);
  for (const auto& [m, c] : terms) g.add_term(m, TropValue(c));
  return g;
}

TropPolynomial random_poly(std::mt19937_64& rng, bool integral) {
  std::uniform_int_distribution<std::int64_t> coord(0, 4);
  std::uniform_int_distribution<int> size(1, 9);
  TropPolynomial g(2);
  const int n = size(rng);
  for (int i = 0; i < n; ++i) {
    const TropValue c = integral ? TropValue(std::uniform_int_distribution<long>(-2, 2)(rng))
                                 : TropValue(oracle::random_rational(rng, 6, 5));
    g.add_term({coord(rng), coord(rng)}, c);
  }
  return g;
}

Point as_point(const RationalPoint& p) { return {p.x, p.y}; }

// Every lifted point of a cell lies on the face cut out at its dual vertex,
// every other lifted point strictly below it; the 2-cells tile the polygon.
void check_upper_hull(const TropPolynomial& g) {
  const NewtonSubdivision s = newton_subdivision(g);
  const WeightedComplex c = corner_locus(g);
  const auto polygon = newton_polygon(g);
  if (polygon.size() < 3) return;
  std::int64_t covered = 0;
  std::size_t two_cells = 0;
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    const NewtonCell& cell = s.cells[i];
    REQUIRE(cell.dim == 2);
    REQUIRE(two_cells < c.vertices.size());
    const Point v = as_point(c.vertices[two_cells++]);
    const Rational top = g.evaluate(v).value();
    std::vector<bool> in_cell(s.points.size(), false);
    std::vector<LatticeVector> pts;
    for (std::size_t k : cell.points) {
      in_cell[k] = true;
      pts.push_back(s.points[k].first);
    }
    for (std::size_t k = 0; k < s.points.size(); ++k) {
      const auto& [m, h] = s.points[k];
      const Rational lift = h + Rational(m.x) * v[0] + Rational(m.y) * v[1];
      if (in_cell[k]) {
        CHECK(lift == top);
      } else {
        CHECK(lift < top);
      }
    }
    covered += oracle::twice_area(convex_hull(pts));
  }
  CHECK(two_cells == c.vertices.size());
  CHECK(covered == oracle::twice_area(polygon));
}

// Rays leaving in direction d carry total weight equal to the lattice length
// of the polygon edge with outer normal d.
void check_rays_match_boundary(const TropPolynomial& g) {
  const WeightedComplex c = corner_locus(g);
  const auto polygon = newton_polygon(g);
  if (polygon.size() < 3) return;
  std::map<LatticeVector, std::int64_t> from_rays;
  for (const ComplexEdge& e : c.edges) {
    if (e.kind == ComplexEdge::Kind::Ray) from_rays[e.direction] += e.weight;
  }
  std::map<LatticeVector, std::int64_t> from_polygon;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const LatticeVector edge = polygon[(i + 1) % polygon.size()] - polygon[i];
    const LatticeVector outer{edge.y, -edge.x};  // CCW polygon
    from_polygon[primitive(outer)] += lattice_length(edge);
  }
  CHECK(from_rays == from_polygon);
}

}  // namespace

TEST_CASE("tropical line") {
  const TropPolynomial line = poly({{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 0}});
  const NewtonSubdivision s = newton_subdivision(line);
  REQUIRE(s.cells.size() == 1);
  CHECK(s.cells[0].dim == 2);
  CHECK(s.cells[0].points.size() == 3);
  const WeightedComplex c = corner_locus(line);
  CHECK(c.vertices == std::vector<RationalPoint>{{0, 0}});
  REQUIRE(c.edges.size() == 3);
  std::vector<LatticeVector> dirs;
  for (const ComplexEdge& e : c.edges) {
    CHECK(e.kind == ComplexEdge::Kind::Ray);
    CHECK(e.weight == 1);
    dirs.push_back(e.direction);
  }
  std::sort(dirs.begin(), dirs.end());
  CHECK(dirs == std::vector<LatticeVector>{{-1, 0}, {0, -1}, {1, 1}});
  CHECK(is_balanced(c));
  CHECK(balance_defect(c, 0) == LatticeVector{0, 0});
}

TEST_CASE("square subdivisions") {
  const TropPolynomial flat = poly({{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 0}});
  const NewtonSubdivision one = newton_subdivision(flat);
  REQUIRE(one.cells.size() == 1);
  CHECK(one.cells[0].points.size() == 4);
  CHECK(corner_locus(flat).vertices.size() == 1);
  const TropPolynomial bent = poly({{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 1}});
  CHECK(newton_subdivision(bent).cells.size() == 2);
  const WeightedComplex c = corner_locus(bent);
  CHECK(c.vertices.size() == 2);
  CHECK(is_balanced(c));
  check_upper_hull(bent);
  const TropPolynomial low = poly({{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, -1}});
  CHECK(newton_subdivision(low).cells.size() == 2);
  check_upper_hull(low);
}

TEST_CASE("collinear exponents give lines") {
  const WeightedComplex c = corner_locus(poly({{{0, 0}, 0}, {{2, 0}, 0}}));
  CHECK(c.vertices.empty());
  REQUIRE(c.edges.size() == 1);
  const ComplexEdge& e = c.edges[0];
  CHECK(e.kind == ComplexEdge::Kind::Line);
  CHECK(e.weight == 2);
  CHECK((e.direction == LatticeVector{0, 1} || e.direction == LatticeVector{0, -1}));
  CHECK(e.anchor.x == 0);
  const WeightedComplex two = corner_locus(poly({{{0, 0}, 0}, {{1, 1}, 3}, {{2, 2}, 0}}));
  CHECK(two.edges.size() == 2);
  CHECK(newton_subdivision(poly({{{0, 0}, 0}, {{1, 1}, 3}, {{2, 2}, 0}})).cells.size() == 2);
  CHECK(corner_locus(poly({{{0, 0}, 0}, {{1, 1}, -3}, {{2, 2}, 0}})).edges.size() == 1);
}

TEST_CASE("single monomials and errors") {
  CHECK(corner_locus(poly({{{3, 1}, 2}})).empty());
  const NewtonSubdivision s = newton_subdivision(poly({{{3, 1}, 2}}));
  REQUIRE(s.cells.size() == 1);
  CHECK(s.cells[0].dim == 0);
  CHECK_THROWS_AS(corner_locus(TropPolynomial(2)), PreconditionError);
  CHECK_THROWS_AS(corner_locus(TropPolynomial::monomial({1, 1, 1})), PreconditionError);
  CHECK_THROWS_AS(newton_subdivision(TropPolynomial(2)), PreconditionError);
}

TEST_CASE("balancing predicate") {
  WeightedComplex lonely;
  lonely.vertices = {{0, 0}};
  ComplexEdge ray;
  ray.kind = ComplexEdge::Kind::Ray;
  ray.from = 0;
  ray.direction = {1, 0};
  lonely.edges = {ray};
  CHECK_FALSE(is_balanced(lonely));
  CHECK(balance_defect(lonely, 0) == LatticeVector{1, 0});
  CHECK(is_balanced(WeightedComplex{}));
}

TEST_CASE("random corner loci are balanced and dual to the subdivision") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 300; ++i) {
    const TropPolynomial g = random_poly(rng, i % 2 == 0);
    const WeightedComplex c = corner_locus(g);
    CHECK(is_balanced(c));
    for (const ComplexEdge& e : c.edges) {
      CHECK(is_primitive(e.direction));
      CHECK(e.weight > 0);
      if (e.kind == ComplexEdge::Kind::Segment) {
        REQUIRE(e.from < c.vertices.size());
        REQUIRE(e.to < c.vertices.size());
        const RationalPoint a = c.vertices[e.from];
        const RationalPoint b = c.vertices[e.to];
        // b - a is a positive multiple of the direction
        CHECK(Rational(e.direction.x) * (b.y - a.y) == Rational(e.direction.y) * (b.x - a.x));
        CHECK(Rational(e.direction.x) * (b.x - a.x) + Rational(e.direction.y) * (b.y - a.y) > 0);
      }
    }
    for (const RationalPoint& v : c.vertices) {
      CHECK(g.supporting_monomials(as_point(v)).size() >= 3);
    }
    check_upper_hull(g);
    check_rays_match_boundary(g);
  }
}

TEST_CASE("corner locus ignores constants and monomial factors") {
  std::mt19937_64 rng(67);
  const FanPtr fan = share(blow_up(projective_plane(), 0));
  for (int i = 0; i < 100; ++i) {
    const TropPolynomial g = random_poly(rng, false);
    const Rational shift = oracle::random_rational(rng);
    const Exponent m{std::uniform_int_distribution<std::int64_t>(-3, 3)(rng),
                     std::uniform_int_distribution<std::int64_t>(-3, 3)(rng)};
    const TropPolynomial moved = g.times_monomial(m, shift);
    const WeightedComplex a = corner_locus(g);
    const WeightedComplex b = corner_locus(moved);
    CHECK(a.vertices == b.vertices);
    REQUIRE(a.edges.size() == b.edges.size());
    for (std::size_t k = 0; k < a.edges.size(); ++k) {
      CHECK(a.edges[k].kind == b.edges[k].kind);
      CHECK(a.edges[k].direction == b.edges[k].direction);
      CHECK(a.edges[k].weight == b.edges[k].weight);
    }
    const ToricDivisor before = divisor_of_section(fan, g).ray_part;
    const ToricDivisor after = divisor_of_section(fan, moved).ray_part;
    CHECK(after == before + principal_divisor({m[0], m[1]}, fan));
  }
}
