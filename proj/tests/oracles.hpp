#pragma once

// Reference implementations used only by the tests. None of them shares code
// with the library beyond the value types.

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "troptoric/divisor.hpp"
#include "troptoric/fan.hpp"
#include "troptoric/trop.hpp"

namespace oracle {

using troptoric::LatticeVector;
using troptoric::Rational;
using troptoric::TropValue;

struct DetResult {
  TropValue value;
  std::uint64_t optimal = 0;  // permutations attaining the value
};

// Expansion along the first column, memoised on the set of rows still free.
// Counts every optimal permutation instead of stopping at a tie.
inline DetResult laplace_det(const std::vector<std::vector<TropValue>>& t) {
  const std::size_t k = t.size();
  std::vector<std::optional<DetResult>> memo(std::size_t{1} << k);
  auto rec = [&](auto&& self, std::uint32_t used, std::size_t col) -> DetResult {
    if (col == k) return {TropValue(0L), 1};
    if (memo[used]) return *memo[used];
    DetResult best{TropValue::neg_inf(), 0};
    for (std::size_t row = 0; row < k; ++row) {
      if (used & (1u << row)) continue;
      if (!t[row][col].is_finite()) continue;
      const DetResult sub = self(self, used | (1u << row), col + 1);
      if (!sub.value.is_finite()) continue;
      const TropValue v(t[row][col].value() + sub.value.value());
      if (!best.value.is_finite() || best.value < v) {
        best = {v, sub.optimal};
      } else if (v == best.value) {
        best.optimal += sub.optimal;
      }
    }
    memo[used] = best;
    return best;
  };
  return rec(rec, 0, 0);
}

struct Interval {
  std::optional<Rational> lo;  // nullopt: unbounded below
  std::optional<Rational> hi;
  bool empty = false;
};

// Fourier-Motzkin projection of { m : <m, e> + a >= 0 } to the first
// coordinate.
inline Interval x_projection(const std::vector<std::pair<LatticeVector, std::int64_t>>& ineqs) {
  Interval out;
  auto lower = [&](const Rational& v) {
    if (!out.lo || *out.lo < v) out.lo = v;
  };
  auto upper = [&](const Rational& v) {
    if (!out.hi || v < *out.hi) out.hi = v;
  };
  // rows of the form  p x + c >= 0 after eliminating y
  std::vector<std::pair<Rational, Rational>> rows;
  for (const auto& [e, a] : ineqs) {
    if (e.y == 0) rows.emplace_back(Rational(e.x), Rational(a));
  }
  for (const auto& [e1, a1] : ineqs) {
    if (e1.y <= 0) continue;
    for (const auto& [e2, a2] : ineqs) {
      if (e2.y >= 0) continue;
      const Rational s1(-e2.y);
      const Rational s2(e1.y);
      rows.emplace_back(s1 * e1.x + s2 * e2.x, s1 * a1 + s2 * a2);
    }
  }
  for (const auto& [p, c] : rows) {
    if (p == 0) {
      if (c < 0) out.empty = true;
    } else if (p > 0) {
      lower(-c / p);
    } else {
      upper(-c / p);
    }
  }
  if (out.lo && out.hi && *out.hi < *out.lo) out.empty = true;
  return out;
}

inline std::int64_t floor_of(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

inline std::int64_t ceil_of(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

// Lattice points of the divisor polytope straight from the inequalities, in
// (y, x) order. nullopt when the region is nonempty and unbounded.
inline std::optional<std::vector<LatticeVector>> lattice_points(const troptoric::ToricDivisor& d) {
  std::vector<std::pair<LatticeVector, std::int64_t>> ineqs;
  for (std::size_t i = 0; i < d.coeffs().size(); ++i) ineqs.emplace_back(d.fan().rays()[i], d[i]);
  const Interval xs = x_projection(ineqs);
  if (xs.empty) return std::vector<LatticeVector>{};
  if (!xs.lo || !xs.hi) return std::nullopt;
  std::vector<LatticeVector> pts;
  // Also treat an unbounded y-fibre over the projection as unbounded; a
  // fibre over one rational x in the interior suffices.
  const Rational mid = (*xs.lo + *xs.hi) / 2;
  std::optional<Rational> ylo;
  std::optional<Rational> yhi;
  for (const auto& [e, a] : ineqs) {
    if (e.y == 0) continue;
    const Rational bound = -(Rational(a) + Rational(e.x) * mid) / e.y;
    if (e.y > 0) {
      if (!ylo || *ylo < bound) ylo = bound;
    } else if (!yhi || bound < *yhi) {
      yhi = bound;
    }
  }
  if (!ylo || !yhi) return std::nullopt;
  for (std::int64_t x = ceil_of(*xs.lo); x <= floor_of(*xs.hi); ++x) {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    bool ok = true;
    for (const auto& [e, a] : ineqs) {
      const Rational c = Rational(a) + Rational(e.x * x);
      if (e.y == 0) {
        if (c < 0) ok = false;
      } else if (e.y > 0) {
        const Rational b = -c / e.y;
        if (!lo || *lo < b) lo = b;
      } else {
        const Rational b = -c / e.y;
        if (!hi || b < *hi) hi = b;
      }
    }
    if (!ok || !lo || !hi) continue;
    for (std::int64_t y = ceil_of(*lo); y <= floor_of(*hi); ++y) pts.push_back({x, y});
  }
  std::sort(pts.begin(), pts.end(), [](LatticeVector a, LatticeVector b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  return pts;
}

// The fans the property suites quantify over.
inline std::vector<troptoric::Fan> builtin_fans() {
  return {troptoric::projective_plane(), troptoric::product_p1_p1(), troptoric::hirzebruch(1),
          troptoric::hirzebruch(2), troptoric::hirzebruch(3)};
}

inline troptoric::Fan random_blowups(troptoric::Fan f, int count, std::mt19937_64& rng) {
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, f.max_cones().size() - 1);
    f = troptoric::blow_up(f, pick(rng));
  }
  return f;
}

inline std::vector<troptoric::Fan> test_fans(std::uint64_t seed = 7, int blown_up = 6) {
  std::vector<troptoric::Fan> fans = builtin_fans();
  std::mt19937_64 rng(seed);
  const std::vector<troptoric::Fan> bases = builtin_fans();
  for (int i = 0; i < blown_up; ++i) {
    std::uniform_int_distribution<int> count(1, 5);
    fans.push_back(random_blowups(bases[static_cast<std::size_t>(i) % bases.size()], count(rng), rng));
  }
  return fans;
}

inline std::vector<std::int64_t> random_coeffs(std::size_t n, std::int64_t lo, std::int64_t hi,
                                               std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  std::vector<std::int64_t> c(n);
  for (auto& v : c) v = dist(rng);
  return c;
}

inline Rational random_rational(std::mt19937_64& rng, std::int64_t range = 20, std::int64_t den = 4) {
  std::uniform_int_distribution<std::int64_t> num(-range * den, range * den);
  std::uniform_int_distribution<std::int64_t> d(1, den);
  Rational r(num(rng), d(rng));
  r.canonicalize();
  return r;
}

// Integral area (twice the area) of a lattice polygon given in order.
inline std::int64_t twice_area(const std::vector<LatticeVector>& poly) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const LatticeVector a = poly[i];
    const LatticeVector b = poly[(i + 1) % poly.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return s < 0 ? -s : s;
}

}  // namespace oracle
