#pragma once

// JSON documents read and written by the command-line tool.
//
//   fan      {"rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[2,0]]}
//   divisor  {"coeffs": {"0": 2, "1": 0, "2": -1}}      keyed by ray index
//   poly     {"terms": [{"exponent": [1,0], "coeff": "3/2"}, ...]}
//   points   [[0,0], ["1/2", 3]]
//
// Rationals are written as JSON integers when integral and as "p/q" strings
// otherwise. Schema violations raise ParseError; documents that parse but
// describe an invalid object (e.g. overlapping cones) raise PreconditionError.

#include "json.hpp"

#include <string_view>

#include "troptoric/curve.hpp"
#include "troptoric/divisor.hpp"
#include "troptoric/fan.hpp"
#include "troptoric/intersect.hpp"
#include "troptoric/rational.hpp"
#include "troptoric/trop.hpp"

namespace troptoric {

using Json = nlohmann::json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json point_to_json(const RationalPoint& p);
Json lattice_to_json(LatticeVector v);
LatticeVector lattice_from_json(const Json& j);

Json fan_to_json(const Fan& f);
Fan fan_from_json(const Json& j);

/// "p2", "p1xp1", "hirzebruch:<a>".
Fan builtin_fan(std::string_view name);

Json divisor_to_json(const ToricDivisor& d);
ToricDivisor divisor_from_json(const Json& j, FanPtr fan);

Json polynomial_to_json(const TropPolynomial& g);
/// Bivariate only; a coefficient may be "-inf" (the term is dropped).
TropPolynomial polynomial_from_json(const Json& j);

/// A plane point; "-inf" coordinates raise PreconditionError (only inner
/// points are accepted).
Point point_from_json(const Json& j);
std::vector<Point> points_from_json(const Json& j);

Json complex_to_json(const WeightedComplex& c);
Json subdivision_to_json(const NewtonSubdivision& s);
Json h0_to_json(const H0Value& h);
Json rr_report_to_json(const RRReport& r);

}  // namespace troptoric
