#pragma once

// Corner loci of bivariate tropical polynomials.
//
// The corner locus of g = max_m (c_m + <m, x>) is dual to the regular
// subdivision of its Newton polygon obtained by lifting m to height c_m and
// projecting the faces of the upper hull. Each 2-cell gives a vertex (the
// point where the cell's monomials tie), each interior cell edge a bounded
// edge, each boundary cell edge a ray. Edge direction is the outward normal
// of the dual cell edge, weight its lattice length.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "troptoric/lattice.hpp"
#include "troptoric/trop.hpp"

namespace troptoric {

struct NewtonCell {
  /// Indices into NewtonSubdivision::points of every lifted point on the face.
  std::vector<std::size_t> points;
  int dim = 0;
};

struct NewtonSubdivision {
  /// Exponents with their lifted heights (the coefficients), in exponent order.
  std::vector<std::pair<LatticeVector, Rational>> points;
  /// Maximal cells only.
  std::vector<NewtonCell> cells;
};

struct ComplexEdge {
  enum class Kind { Segment, Ray, Line };

  Kind kind = Kind::Segment;
  /// Segment: from -> to; Ray: emanates from `from`; Line: unused.
  std::size_t from = 0;
  std::size_t to = 0;
  /// Line only: a point on the line.
  RationalPoint anchor;
  /// Primitive. Segment: points from `from` towards `to`; Ray: outgoing.
  LatticeVector direction;
  std::int64_t weight = 1;
};

struct WeightedComplex {
  std::vector<RationalPoint> vertices;
  std::vector<ComplexEdge> edges;

  bool empty() const { return vertices.empty() && edges.empty(); }
};

/// Throws PreconditionError if g is empty or not bivariate.
NewtonSubdivision newton_subdivision(const TropPolynomial& g);

/// Vertices of the Newton polygon (convex hull of the exponents), CCW.
std::vector<LatticeVector> newton_polygon(const TropPolynomial& g);

/// Throws PreconditionError if g is empty or not bivariate. Vertices are
/// sorted; a single monomial gives the empty complex.
WeightedComplex corner_locus(const TropPolynomial& g);

/// sum_i w_i v_i = 0 at every vertex over incident edges and rays with
/// outgoing primitive directions v_i. Vacuously true without vertices.
bool is_balanced(const WeightedComplex& c);

/// The weighted outgoing direction sum at one vertex.
LatticeVector balance_defect(const WeightedComplex& c, std::size_t vertex);

}  // namespace troptoric
