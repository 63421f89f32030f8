#include "troptoric/curve.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "troptoric/errors.hpp"

namespace troptoric {

namespace {

struct Term {
  LatticeVector m;
  Rational c;
};

std::vector<Term> bivariate_terms(const TropPolynomial& g, const char* op) {
  if (g.dim() != 2) throw PreconditionError(std::string(op) + ": polynomial is not bivariate");
  if (g.empty()) throw PreconditionError(std::string(op) + ": empty polynomial");
  std::vector<Term> terms;
  terms.reserve(g.size());
  for (const auto& [m, c] : g.terms()) terms.push_back({{m[0], m[1]}, c});
  return terms;
}

Rational value_at(const Term& t, const RationalPoint& p) {
  Rational v = t.c + dot(t.m, p);
  return v;
}

struct Dual {
  std::vector<RationalPoint> vertices;
  std::vector<ComplexEdge> edges;
  std::vector<NewtonCell> cells;
};

bool all_collinear(const std::vector<Term>& terms) {
  for (std::size_t i = 1; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (cross(terms[i].m - terms[0].m, terms[j].m - terms[0].m) != 0) return false;
    }
  }
  return true;
}

Dual collinear_dual(const std::vector<Term>& terms) {
  Dual out;
  if (terms.size() == 1) {
    out.cells.push_back({{0}, 0});
    return out;
  }
  const LatticeVector base = terms[0].m;
  const LatticeVector u = primitive(terms[1].m - base);
  // Position of each exponent along the line, in units of u.
  std::vector<std::int64_t> pos(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) pos[i] = dot(terms[i].m - base, u) / dot(u, u);

  std::vector<std::size_t> order(terms.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });

  // Upper hull of the lifted points (pos, c), keeping only strict corners.
  std::vector<std::size_t> hull;
  for (std::size_t i : order) {
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull.back();
      // b is dropped unless it lies strictly above segment a-i.
      Rational lhs = (terms[b].c - terms[a].c) * Rational(static_cast<long>(pos[i] - pos[a]));
      Rational rhs = (terms[i].c - terms[a].c) * Rational(static_cast<long>(pos[b] - pos[a]));
      if (lhs > rhs) break;
      hull.pop_back();
    }
    hull.push_back(i);
  }

  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const Term& a = terms[hull[k]];
    const Term& b = terms[hull[k + 1]];
    const LatticeVector e = b.m - a.m;
    // Points x with c_a + <m_a, x> = c_b + <m_b, x>: <e, x> = c_a - c_b.
    Rational scale = (a.c - b.c) / Rational(static_cast<long>(dot(e, e)));
    ComplexEdge line;
    line.kind = ComplexEdge::Kind::Line;
    line.anchor = {scale * Rational(static_cast<long>(e.x)), scale * Rational(static_cast<long>(e.y))};
    line.direction = primitive(rotate_ccw(e));
    line.weight = lattice_length(e);
    out.edges.push_back(line);

    NewtonCell cell;
    cell.dim = 1;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (pos[i] < pos[hull[k]] || pos[i] > pos[hull[k + 1]]) continue;
      if (value_at(terms[i], line.anchor) == value_at(a, line.anchor)) cell.points.push_back(i);
    }
    out.cells.push_back(std::move(cell));
  }
  return out;
}

std::optional<RationalPoint> first_vertex(const std::vector<Term>& terms) {
  const std::size_t n = terms.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const LatticeVector a = terms[j].m - terms[i].m;
        const LatticeVector b = terms[k].m - terms[i].m;
        const std::int64_t det = cross(a, b);
        if (det == 0) continue;
        // <a, x> = c_i - c_j and <b, x> = c_i - c_k.
        Rational r1 = terms[i].c - terms[j].c;
        Rational r2 = terms[i].c - terms[k].c;
        Rational d(static_cast<long>(det));
        RationalPoint p{(r1 * Rational(static_cast<long>(b.y)) - Rational(static_cast<long>(a.y)) * r2) / d,
                        (Rational(static_cast<long>(a.x)) * r2 - r1 * Rational(static_cast<long>(b.x))) / d};
        const Rational v = value_at(terms[i], p);
        bool top = true;
        for (const Term& t : terms) {
          if (value_at(t, p) > v) {
            top = false;
            break;
          }
        }
        if (top) return p;
      }
    }
  }
  return std::nullopt;
}

Dual planar_dual(const std::vector<Term>& terms) {
  Dual out;
  std::map<RationalPoint, std::size_t> index;
  std::vector<std::vector<std::size_t>> supports;
  std::deque<std::size_t> queue;

  auto add_vertex = [&](const RationalPoint& p) -> std::size_t {
    auto [it, inserted] = index.emplace(p, out.vertices.size());
    if (!inserted) return it->second;
    out.vertices.push_back(p);
    std::vector<std::size_t> support;
    Rational best;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      Rational v = value_at(terms[i], p);
      if (support.empty() || best < v) {
        support.assign(1, i);
        best = v;
      } else if (v == best) {
        support.push_back(i);
      }
    }
    supports.push_back(std::move(support));
    queue.push_back(it->second);
    return it->second;
  };

  const auto start = first_vertex(terms);
  if (!start) throw std::logic_error("corner_locus: no vertex for a 2-dimensional Newton polygon");
  add_vertex(*start);

  std::set<std::pair<std::size_t, std::size_t>> segments;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    const RationalPoint p = out.vertices[v];
    const std::vector<std::size_t> support = supports[v];
    const Rational value = value_at(terms[support[0]], p);

    std::vector<bool> in_support(terms.size(), false);
    std::vector<LatticeVector> exps;
    for (std::size_t i : support) {
      in_support[i] = true;
      exps.push_back(terms[i].m);
    }
    const std::vector<LatticeVector> hull = convex_hull(exps);

    for (std::size_t h = 0; h < hull.size(); ++h) {
      const LatticeVector a = hull[h];
      const LatticeVector e = hull[(h + 1) % hull.size()] - a;
      const LatticeVector d = primitive({e.y, -e.x});
      const std::int64_t rate = dot(a, d);

      std::optional<Rational> step;
      for (std::size_t q = 0; q < terms.size(); ++q) {
        if (in_support[q]) continue;
        const std::int64_t gain = dot(terms[q].m, d) - rate;
        if (gain <= 0) continue;
        Rational t = (value - value_at(terms[q], p)) / Rational(static_cast<long>(gain));
        if (!step || t < *step) step = std::move(t);
      }

      ComplexEdge edge;
      edge.direction = d;
      edge.weight = lattice_length(e);
      edge.from = v;
      if (!step) {
        edge.kind = ComplexEdge::Kind::Ray;
        out.edges.push_back(edge);
        continue;
      }
      RationalPoint next{p.x + *step * Rational(static_cast<long>(d.x)),
                         p.y + *step * Rational(static_cast<long>(d.y))};
      const std::size_t w = add_vertex(next);
      if (segments.emplace(std::min(v, w), std::max(v, w)).second) {
        edge.kind = ComplexEdge::Kind::Segment;
        edge.to = w;
        out.edges.push_back(edge);
      }
    }
  }

  // Canonical order: vertices sorted, cells aligned with their vertices.
  std::vector<std::size_t> order(out.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return out.vertices[a] < out.vertices[b]; });
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  Dual sorted;
  for (std::size_t i : order) {
    sorted.vertices.push_back(out.vertices[i]);
    sorted.cells.push_back({supports[i], 2});
  }
  for (ComplexEdge e : out.edges) {
    e.from = rank[e.from];
    if (e.kind == ComplexEdge::Kind::Segment) {
      e.to = rank[e.to];
      if (e.to < e.from) {
        std::swap(e.from, e.to);
        e.direction = -e.direction;
      }
    }
    sorted.edges.push_back(e);
  }
  std::sort(sorted.edges.begin(), sorted.edges.end(), [](const ComplexEdge& a, const ComplexEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.to != b.to) return a.to < b.to;
    return angle_less(a.direction, b.direction);
  });
  return sorted;
}

Dual compute_dual(const TropPolynomial& g, const char* op) {
  const std::vector<Term> terms = bivariate_terms(g, op);
  return all_collinear(terms) ? collinear_dual(terms) : planar_dual(terms);
}

}  // namespace

NewtonSubdivision newton_subdivision(const TropPolynomial& g) {
  Dual dual = compute_dual(g, "newton_subdivision");
  NewtonSubdivision out;
  for (const auto& [m, c] : g.terms()) out.points.emplace_back(LatticeVector{m[0], m[1]}, c);
  out.cells = std::move(dual.cells);
  return out;
}

std::vector<LatticeVector> newton_polygon(const TropPolynomial& g) {
  const std::vector<Term> terms = bivariate_terms(g, "newton_polygon");
  std::vector<LatticeVector> exps;
  for (const Term& t : terms) exps.push_back(t.m);
  return convex_hull(exps);
}

WeightedComplex corner_locus(const TropPolynomial& g) {
  Dual dual = compute_dual(g, "corner_locus");
  return {std::move(dual.vertices), std::move(dual.edges)};
}

LatticeVector balance_defect(const WeightedComplex& c, std::size_t vertex) {
  LatticeVector sum;
  for (const ComplexEdge& e : c.edges) {
    switch (e.kind) {
      case ComplexEdge::Kind::Segment:
        if (e.from == vertex) sum = sum + e.weight * e.direction;
        if (e.to == vertex) sum = sum - e.weight * e.direction;
        break;
      case ComplexEdge::Kind::Ray:
        if (e.from == vertex) sum = sum + e.weight * e.direction;
        break;
      case ComplexEdge::Kind::Line:
        break;
    }
  }
  return sum;
}

bool is_balanced(const WeightedComplex& c) {
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    if (balance_defect(c, v) != LatticeVector{}) return false;
  }
  return true;
}

}  // namespace troptoric
