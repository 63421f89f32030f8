#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "troptoric/errors.hpp"
#include "troptoric/trop.hpp"

using namespace troptoric;

namespace {

const TropValue kInf = TropValue::neg_inf();

TropPolynomial poly(std::initializer_list<std::pair<Exponent, long>> terms) {
  TropPolynomial g(2);
  for (const auto& [m, c] : terms) g.add_term(m, TropValue(c));
  return g;
}

TropValue random_value(std::mt19937_64& rng) {
  if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) return kInf;
  return oracle::random_rational(rng);
}

}  // namespace

TEST_CASE("semifield operations") {
  CHECK(trop_add(3L, 5L) == TropValue(5L));
  CHECK(trop_add(kInf, 2L) == TropValue(2L));
  CHECK(trop_add(kInf, kInf) == kInf);
  CHECK(trop_mul(3L, 5L) == TropValue(8L));
  CHECK(trop_mul(0L, make_rational(7, 3)) == TropValue(make_rational(7, 3)));
  CHECK(trop_mul(kInf, 7L) == kInf);
  CHECK(kInf < TropValue(-1000000L));
  CHECK(kInf.to_string() == "-inf");
  CHECK_THROWS_AS(kInf.value(), std::logic_error);
}

TEST_CASE("semiring laws on random values") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const TropValue a = random_value(rng);
    const TropValue b = random_value(rng);
    const TropValue c = random_value(rng);
    CHECK(trop_add(a, b) == trop_add(b, a));
    CHECK(trop_mul(a, b) == trop_mul(b, a));
    CHECK(trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c)));
    CHECK(trop_mul(trop_mul(a, b), c) == trop_mul(a, trop_mul(b, c)));
    CHECK(trop_mul(a, trop_add(b, c)) == trop_add(trop_mul(a, b), trop_mul(a, c)));
    CHECK(trop_mul(a, TropValue(0L)) == a);
    CHECK(trop_add(a, kInf) == a);
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS(make_rational(1, 0));
  CHECK(floor_to_int(make_rational(-3, 2)) == -2);
  CHECK(ceil_to_int(make_rational(-3, 2)) == -1);
}

TEST_CASE("tropical determinant examples") {
  const TropDeterminant id = trop_det(TropMatrix({{0L, kInf}, {kInf, 0L}}));
  CHECK(id.value == TropValue(0L));
  CHECK_FALSE(id.tie);
  const TropDeterminant d = trop_det(TropMatrix({{1L, 2L}, {3L, 4L}}));
  CHECK(d.value == TropValue(5L));
  CHECK(d.tie);  // 1 + 4 = 2 + 3
  const TropDeterminant strict = trop_det(TropMatrix({{1L, 2L}, {3L, 5L}}));
  CHECK(strict.value == TropValue(6L));
  CHECK_FALSE(strict.tie);
  const TropDeterminant z = trop_det(TropMatrix({{0L, 0L}, {0L, 0L}}));
  CHECK(z.value == TropValue(0L));
  CHECK(z.tie);
  const TropDeterminant bottom = trop_det(TropMatrix({{kInf, kInf}, {0L, 0L}}));
  CHECK(bottom.value == kInf);
  CHECK(bottom.tie);
}

TEST_CASE("tropical determinant size limits") {
  CHECK_THROWS_AS(trop_det(TropMatrix(0)), PreconditionError);
  CHECK_THROWS_AS(trop_det(TropMatrix(kMaxDeterminantSize + 1)), PreconditionError);
  CHECK_THROWS_AS(TropMatrix(std::vector<std::vector<TropValue>>{{0L, 1L}}), PreconditionError);
}

TEST_CASE("tropical determinant agrees with the Laplace oracle") {
  std::mt19937_64 rng(5);
  for (std::size_t k = 1; k <= 6; ++k) {
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<std::vector<TropValue>> rows(k, std::vector<TropValue>(k));
      const bool small = trial % 2 == 0;  // small integer entries force ties
      for (auto& row : rows) {
        for (auto& v : row) {
          v = small ? TropValue(std::uniform_int_distribution<long>(0, 2)(rng)) : random_value(rng);
        }
      }
      const TropDeterminant got = trop_det(TropMatrix(rows));
      const oracle::DetResult want = oracle::laplace_det(rows);
      CHECK(got.value == want.value);
      CHECK(got.tie == (!want.value.is_finite() || want.optimal >= 2));
    }
  }
}

TEST_CASE("evaluation and support") {
  const TropPolynomial line = poly({{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 0}});
  CHECK(line.evaluate({0, 0}) == TropValue(0L));
  CHECK(line.supporting_monomials({0, 0}) == std::vector<Exponent>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(TropPolynomial(2).evaluate({3, 4}) == kInf);
  CHECK(poly({{{1, 1}, 2}}).evaluate({3, 4}) == TropValue(9L));
  const TropPolynomial half = poly({{{0, 0}, 0}, {{1, 0}, 0}});
  CHECK(half.supporting_monomials({5, 0}) == std::vector<Exponent>{{1, 0}});
  CHECK(half.supporting_monomials({0, 7}) == std::vector<Exponent>{{0, 0}, {1, 0}});
  CHECK_THROWS_AS(line.evaluate({1}), PreconditionError);
  CHECK_THROWS_AS(TropPolynomial(2).supporting_monomials({0, 0}), PreconditionError);
}

TEST_CASE("canonical form merges duplicates and drops -inf") {
  TropPolynomial g(2);
  g.add_term({1, 0}, 3L);
  g.add_term({1, 0}, 5L);
  g.add_term({0, 1}, kInf);
  CHECK(g.size() == 1);
  CHECK(g.terms().at({1, 0}) == 5);
  const TropPolynomial h(2, {{{1, 0}, 5L}, {{1, 0}, 3L}});
  CHECK(g == h);
  CHECK(TropMonomial{{1, 0}, kInf}.evaluate({1, 1}) == kInf);
}

TEST_CASE("evaluation is convex") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    TropPolynomial g(2);
    for (int j = 0; j < 6; ++j) {
      g.add_term({std::uniform_int_distribution<long>(-3, 3)(rng), std::uniform_int_distribution<long>(-3, 3)(rng)},
                 oracle::random_rational(rng));
    }
    const Point x{oracle::random_rational(rng), oracle::random_rational(rng)};
    const Point y{oracle::random_rational(rng), oracle::random_rational(rng)};
    const Rational t = make_rational(std::uniform_int_distribution<long>(0, 8)(rng), 8);
    const Point z{t * x[0] + (1 - t) * y[0], t * x[1] + (1 - t) * y[1]};
    CHECK(g.evaluate(z).value() <= t * g.evaluate(x).value() + (1 - t) * g.evaluate(y).value());
  }
}

TEST_CASE("support is a singleton at random points") {
  std::mt19937_64 rng(9);
  const TropPolynomial g = poly({{{0, 0}, 0}, {{1, 0}, 1}, {{0, 1}, -2}, {{2, 1}, 0}, {{-1, 3}, 4}});
  int singletons = 0;
  for (int i = 0; i < 1000; ++i) {
    const Point x{oracle::random_rational(rng, 20, 97), oracle::random_rational(rng, 20, 89)};
    const auto s = g.supporting_monomials(x);
    REQUIRE_FALSE(s.empty());
    singletons += s.size() == 1 ? 1 : 0;
  }
  CHECK(singletons >= 990);
}

TEST_CASE("extremal generators") {
  const std::vector<TropMonomial> two{{{0}, 0L}, {{1}, 0L}};
  CHECK(is_extremal(two, {{0}, 0L}));
  const std::vector<TropMonomial> dup{{{0}, 0L}, {{0}, 1L}};
  std::size_t dominated = 0;
  CHECK(merge_generators(dup, &dominated).size() == 1);
  CHECK(dominated == 1);
  CHECK(is_extremal(dup, {{0}, 0L}));
  const std::vector<TropMonomial> three{{{0, 0}, 0L}, {{1, 0}, 0L}, {{0, 1}, 0L}};
  CHECK(is_extremal(three, {{1, 0}, 0L}));
  CHECK_THROWS_AS(is_extremal(three, {{1, 1}, 0L}), PreconditionError);
}

TEST_CASE("times_monomial and polynomial sum") {
  const TropPolynomial g = poly({{{0, 0}, 0}, {{1, 0}, 2}});
  const TropPolynomial h = g.times_monomial({1, 1}, 3);
  CHECK(h.terms().at({1, 1}) == 3);
  CHECK(h.terms().at({2, 1}) == 5);
  const TropPolynomial s = trop_add(g, poly({{{1, 0}, 4}, {{0, 2}, 1}}));
  CHECK(s.size() == 3);
  CHECK(s.terms().at({1, 0}) == 4);
}
