#include "troptoric/trop.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "troptoric/errors.hpp"

namespace troptoric {

const Rational& TropValue::value() const {
  if (!value_) throw std::logic_error("TropValue::value() on -inf");
  return *value_;
}

std::string TropValue::to_string() const {
  return value_ ? troptoric::to_string(*value_) : std::string("-inf");
}

std::strong_ordering operator<=>(const TropValue& a, const TropValue& b) {
  if (!a.value_ || !b.value_) return a.value_.has_value() <=> b.value_.has_value();
  const int c = cmp(*a.value_, *b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

TropValue trop_add(const TropValue& a, const TropValue& b) { return a < b ? b : a; }

TropValue trop_mul(const TropValue& a, const TropValue& b) {
  if (!a.is_finite() || !b.is_finite()) return TropValue::neg_inf();
  Rational s = a.value() + b.value();
  return TropValue(std::move(s));
}

namespace {

Rational pairing(const Exponent& m, const Point& x) {
  Rational acc(0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) acc += Rational(static_cast<long>(m[i])) * x[i];
  }
  return acc;
}

}  // namespace

TropValue TropMonomial::evaluate(const Point& x) const {
  if (x.size() != exponent.size()) {
    throw PreconditionError("evaluate: point dimension does not match exponent");
  }
  if (!coefficient.is_finite()) return TropValue::neg_inf();
  Rational v = coefficient.value() + pairing(exponent, x);
  return TropValue(std::move(v));
}

TropPolynomial::TropPolynomial(std::size_t dim, const std::vector<TropMonomial>& terms)
    : dim_(dim) {
  for (const auto& t : terms) add_term(t.exponent, t.coefficient);
}

TropPolynomial TropPolynomial::monomial(Exponent m, Rational c) {
  TropPolynomial p(m.size());
  p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

void TropPolynomial::add_term(const Exponent& m, const TropValue& c) {
  if (m.size() != dim_) throw PreconditionError("add_term: exponent dimension mismatch");
  if (!c.is_finite()) return;
  auto [it, inserted] = terms_.emplace(m, c.value());
  if (!inserted && it->second < c.value()) it->second = c.value();
}

TropValue TropPolynomial::evaluate(const Point& x) const {
  if (x.size() != dim_) throw PreconditionError("evaluate: dimension mismatch");
  TropValue best;
  for (const auto& [m, c] : terms_) {
    Rational v = c + pairing(m, x);
    if (!best.is_finite() || best.value() < v) best = TropValue(std::move(v));
  }
  return best;
}

std::vector<Exponent> TropPolynomial::supporting_monomials(const Point& x) const {
  if (terms_.empty()) throw PreconditionError("supporting_monomials: empty polynomial");
  if (x.size() != dim_) throw PreconditionError("supporting_monomials: dimension mismatch");
  std::vector<Exponent> support;
  Rational best;
  for (const auto& [m, c] : terms_) {
    Rational v = c + pairing(m, x);
    if (support.empty() || best < v) {
      support.assign(1, m);
      best = v;
    } else if (v == best) {
      support.push_back(m);
    }
  }
  return support;
}

TropPolynomial TropPolynomial::times_monomial(const Exponent& m, const Rational& c) const {
  if (m.size() != dim_) throw PreconditionError("times_monomial: dimension mismatch");
  TropPolynomial out(dim_);
  for (const auto& [e, coeff] : terms_) {
    Exponent shifted(dim_);
    for (std::size_t i = 0; i < dim_; ++i) shifted[i] = e[i] + m[i];
    Rational v = coeff + c;
    out.terms_.emplace(std::move(shifted), std::move(v));
  }
  return out;
}

TropPolynomial trop_add(const TropPolynomial& f, const TropPolynomial& g) {
  if (f.dim() != g.dim()) throw PreconditionError("trop_add: dimension mismatch");
  TropPolynomial out = f;
  for (const auto& [m, c] : g.terms()) out.add_term(m, TropValue(c));
  return out;
}

TropMatrix::TropMatrix(const std::vector<std::vector<TropValue>>& rows)
    : k_(rows.size()), entries_() {
  entries_.reserve(k_ * k_);
  for (const auto& row : rows) {
    if (row.size() != k_) throw PreconditionError("TropMatrix: rows do not form a square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

TropDeterminant trop_det(const TropMatrix& m) {
  const std::size_t k = m.size();
  if (k == 0) throw PreconditionError("trop_det: empty matrix");
  if (k > kMaxDeterminantSize) {
    throw PreconditionError("trop_det: matrix too large for permutation enumeration");
  }
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  TropValue best;
  std::size_t attaining = 0;
  do {
    bool finite = true;
    Rational sum(0);
    for (std::size_t i = 0; i < k; ++i) {
      const TropValue& t = m(perm[i], i);
      if (!t.is_finite()) {
        finite = false;
        break;
      }
      sum += t.value();
    }
    if (!finite) continue;
    if (!best.is_finite() || best.value() < sum) {
      best = TropValue(sum);
      attaining = 1;
    } else if (best.value() == sum) {
      ++attaining;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, !best.is_finite() || attaining >= 2};
}

std::vector<TropMonomial> merge_generators(std::span<const TropMonomial> gens,
                                           std::size_t* dominated) {
  std::map<Exponent, TropValue> merged;
  std::size_t dropped = 0;
  for (const auto& g : gens) {
    auto [it, inserted] = merged.emplace(g.exponent, g.coefficient);
    if (inserted) continue;
    if (it->second < g.coefficient) it->second = g.coefficient;
    ++dropped;
  }
  // Each dropped entry lost against the survivor unless it equals it exactly.
  std::size_t strictly = 0;
  if (dropped > 0) {
    for (const auto& g : gens) {
      if (merged.at(g.exponent) != g.coefficient) ++strictly;
    }
  }
  if (dominated != nullptr) *dominated = strictly;
  std::vector<TropMonomial> out;
  out.reserve(merged.size());
  for (auto& [m, c] : merged) out.push_back({m, c});
  return out;
}

namespace {

// inf over x of (g(x) - h(x)) for monomials: finite only for equal slopes.
TropValue residual(const TropMonomial& g, const TropMonomial& h) {
  if (g.exponent != h.exponent || !g.coefficient.is_finite() || !h.coefficient.is_finite()) {
    return TropValue::neg_inf();
  }
  Rational d = g.coefficient.value() - h.coefficient.value();
  return TropValue(std::move(d));
}

}  // namespace

bool is_extremal(std::span<const TropMonomial> gens, const TropMonomial& g) {
  const bool member = std::any_of(gens.begin(), gens.end(), [&](const TropMonomial& h) {
    return h.exponent == g.exponent && h.coefficient == g.coefficient;
  });
  if (!member) throw PreconditionError("is_extremal: g is not among the generators");

  const std::vector<TropMonomial> merged = merge_generators(gens);
  const auto self = std::find_if(merged.begin(), merged.end(), [&](const TropMonomial& h) {
    return h.exponent == g.exponent;
  });
  // The zero element -inf is never extremal.
  if (!self->coefficient.is_finite()) return false;

  // Best approximation of the generator from below by the others. The
  // combination is a max of monomials, so it equals the generator as a
  // function iff some term has the same slope and the same coefficient.
  TropValue approx_coeff;
  for (auto it = merged.begin(); it != merged.end(); ++it) {
    if (it == self) continue;
    const TropValue scale = residual(*self, *it);
    if (!scale.is_finite()) continue;
    approx_coeff = trop_add(approx_coeff, trop_mul(scale, it->coefficient));
  }
  return approx_coeff != self->coefficient;
}

}  // namespace troptoric
