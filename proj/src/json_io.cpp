#include "troptoric/json_io.hpp"

#include <charconv>
#include <string>

#include "troptoric/errors.hpp"

namespace troptoric {

namespace {

std::int64_t int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer");
  return j.get<std::int64_t>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

bool is_neg_inf(const Json& j) { return j.is_string() && j.get<std::string>() == "-inf"; }

}  // namespace

Json rational_to_json(const Rational& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
  return Json(to_string(r));
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

Json point_to_json(const RationalPoint& p) {
  return Json::array({rational_to_json(p.x), rational_to_json(p.y)});
}

Json lattice_to_json(LatticeVector v) { return Json::array({v.x, v.y}); }

LatticeVector lattice_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected an integer pair, got " + j.dump());
  return {int_from_json(j[0], "lattice vector"), int_from_json(j[1], "lattice vector")};
}

Json fan_to_json(const Fan& f) {
  Json rays = Json::array();
  for (LatticeVector r : f.rays()) rays.push_back(lattice_to_json(r));
  Json cones = Json::array();
  for (std::size_t i = 0; i < f.max_cones().size(); ++i) cones.push_back(f.cone_ray_indices(i));
  return {{"rays", rays}, {"max_cones", cones}};
}

Fan fan_from_json(const Json& j) {
  const Json& rays_j = field(j, "rays");
  const Json& cones_j = field(j, "max_cones");
  if (!rays_j.is_array() || !cones_j.is_array()) throw ParseError("fan: rays and max_cones must be arrays");
  std::vector<LatticeVector> rays;
  for (const Json& r : rays_j) rays.push_back(lattice_from_json(r));
  std::vector<std::vector<std::size_t>> cones;
  for (const Json& c : cones_j) {
    if (!c.is_array()) throw ParseError("fan: each cone must be an array of ray indices");
    std::vector<std::size_t> idx;
    for (const Json& i : c) {
      const std::int64_t v = int_from_json(i, "cone ray index");
      if (v < 0) throw ParseError("fan: negative ray index");
      idx.push_back(static_cast<std::size_t>(v));
    }
    cones.push_back(std::move(idx));
  }
  return Fan::from_indexed(std::move(rays), cones);
}

Fan builtin_fan(std::string_view name) {
  if (name == "p2") return projective_plane();
  if (name == "p1xp1") return product_p1_p1();
  constexpr std::string_view prefix = "hirzebruch:";
  if (name.substr(0, prefix.size()) == prefix) {
    const std::string_view arg = name.substr(prefix.size());
    int a = 0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), a);
    if (ec != std::errc() || ptr != arg.data() + arg.size()) {
      throw ParseError("bad hirzebruch parameter '" + std::string(arg) + "'");
    }
    return hirzebruch(a);
  }
  throw ParseError("unknown builtin fan '" + std::string(name) + "' (p2, p1xp1, hirzebruch:<a>)");
}

Json divisor_to_json(const ToricDivisor& d) {
  Json coeffs = Json::object();
  for (std::size_t i = 0; i < d.coeffs().size(); ++i) coeffs[std::to_string(i)] = d[i];
  return {{"coeffs", coeffs}};
}

ToricDivisor divisor_from_json(const Json& j, FanPtr fan) {
  const Json& coeffs_j = field(j, "coeffs");
  if (!coeffs_j.is_object()) throw ParseError("divisor: coeffs must be an object keyed by ray index");
  const std::size_t n = fan->ray_count();
  std::vector<std::int64_t> coeffs(n, 0);
  std::vector<bool> seen(n, false);
  for (const auto& [key, value] : coeffs_j.items()) {
    std::size_t idx = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), idx);
    if (ec != std::errc() || ptr != key.data() + key.size() || idx >= n) {
      throw ParseError("divisor: '" + key + "' is not a ray index of the fan");
    }
    coeffs[idx] = int_from_json(value, "divisor coefficient");
    seen[idx] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen[i]) throw ParseError("divisor: missing coefficient for ray " + std::to_string(i));
  }
  return ToricDivisor(std::move(fan), std::move(coeffs));
}

Json polynomial_to_json(const TropPolynomial& g) {
  Json terms = Json::array();
  for (const auto& [m, c] : g.terms()) {
    terms.push_back({{"exponent", m}, {"coeff", rational_to_json(c)}});
  }
  return {{"terms", terms}};
}

TropPolynomial polynomial_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("polynomial: terms must be an array");
  TropPolynomial g(2);
  for (const Json& t : terms) {
    const LatticeVector m = lattice_from_json(field(t, "exponent"));
    const Json& c = field(t, "coeff");
    g.add_term({m.x, m.y}, is_neg_inf(c) ? TropValue::neg_inf() : TropValue(rational_from_json(c)));
  }
  return g;
}

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected a point [x, y], got " + j.dump());
  Point p;
  for (const Json& c : j) {
    if (is_neg_inf(c)) throw PreconditionError("point " + j.dump() + " has a -inf coordinate");
    p.push_back(rational_from_json(c));
  }
  return p;
}

std::vector<Point> points_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of points");
  std::vector<Point> out;
  for (const Json& p : j) out.push_back(point_from_json(p));
  return out;
}

Json complex_to_json(const WeightedComplex& c) {
  Json vertices = Json::array();
  for (const RationalPoint& v : c.vertices) vertices.push_back(point_to_json(v));
  Json edges = Json::array();
  for (const ComplexEdge& e : c.edges) {
    Json je;
    switch (e.kind) {
      case ComplexEdge::Kind::Segment:
        je = {{"kind", "segment"}, {"from", e.from}, {"to", e.to}};
        break;
      case ComplexEdge::Kind::Ray:
        je = {{"kind", "ray"}, {"from", e.from}};
        break;
      case ComplexEdge::Kind::Line:
        je = {{"kind", "line"}, {"anchor", point_to_json(e.anchor)}};
        break;
    }
    je["direction"] = lattice_to_json(e.direction);
    je["weight"] = e.weight;
    edges.push_back(std::move(je));
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

Json subdivision_to_json(const NewtonSubdivision& s) {
  Json points = Json::array();
  for (const auto& [m, c] : s.points) {
    points.push_back({{"exponent", lattice_to_json(m)}, {"height", rational_to_json(c)}});
  }
  Json cells = Json::array();
  for (const NewtonCell& cell : s.cells) cells.push_back({{"dim", cell.dim}, {"points", cell.points}});
  return {{"points", points}, {"cells", cells}};
}

Json h0_to_json(const H0Value& h) {
  if (h.is_finite()) return Json(h.count());
  return Json("infinite");
}

Json rr_report_to_json(const RRReport& r) {
  return {{"h0_D", h0_to_json(r.h0_D)},
          {"h0_K_minus_D", h0_to_json(r.h0_K_minus_D)},
          {"pairing_term", rational_to_json(r.pairing_term)},
          {"euler", r.euler},
          {"rhs", rational_to_json(r.rhs)},
          {"defect", rational_to_json(r.defect)},
          {"holds", r.holds}};
}

}  // namespace troptoric
