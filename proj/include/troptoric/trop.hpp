#pragma once

// The max-plus semifield T = Q u {-inf}, tropical Laurent polynomials viewed
// as functions, and the tropical determinant.
//
//   "x + y" = max(x, y)      "x y" = x + y
//
// -inf is neutral for the tropical sum and absorbing for the product; 0 is
// the multiplicative unit.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "troptoric/rational.hpp"

namespace troptoric {

class TropValue {
 public:
  /// -inf.
  TropValue() = default;
  TropValue(Rational v) : value_(std::move(v)) {}  // NOLINT: implicit on purpose
  TropValue(long v) : value_(Rational(v)) {}        // NOLINT

  static TropValue neg_inf() { return {}; }

  bool is_finite() const { return value_.has_value(); }

  /// Throws std::logic_error for -inf.
  const Rational& value() const;

  std::string to_string() const;

  friend bool operator==(const TropValue& a, const TropValue& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const TropValue& a, const TropValue& b);

 private:
  std::optional<Rational> value_;
};

TropValue trop_add(const TropValue& a, const TropValue& b);
TropValue trop_mul(const TropValue& a, const TropValue& b);

using Exponent = std::vector<std::int64_t>;
using Point = std::vector<Rational>;

struct TropMonomial {
  Exponent exponent;
  TropValue coefficient;

  /// c + <m, x>, or -inf when c = -inf.
  TropValue evaluate(const Point& x) const;
};

/// A tropical Laurent polynomial max_m (c_m + <m, x>). Canonical form: one
/// coefficient per exponent (duplicates merged by max), -inf terms dropped.
class TropPolynomial {
 public:
  explicit TropPolynomial(std::size_t dim) : dim_(dim) {}
  TropPolynomial(std::size_t dim, const std::vector<TropMonomial>& terms);

  static TropPolynomial monomial(Exponent m, Rational c = Rational(0));

  std::size_t dim() const { return dim_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  /// Tropical sum of a term into the polynomial.
  void add_term(const Exponent& m, const TropValue& c);

  /// Throws PreconditionError when dim(x) != dim().
  TropValue evaluate(const Point& x) const;

  /// Exponents whose term attains evaluate(x), in exponent order.
  /// Throws PreconditionError on an empty polynomial.
  std::vector<Exponent> supporting_monomials(const Point& x) const;

  /// Tropical product with c * x^m.
  TropPolynomial times_monomial(const Exponent& m, const Rational& c) const;

  friend bool operator==(const TropPolynomial&, const TropPolynomial&) = default;

 private:
  std::size_t dim_;
  std::map<Exponent, Rational> terms_;
};

/// Pointwise max of two polynomials of the same dimension.
TropPolynomial trop_add(const TropPolynomial& f, const TropPolynomial& g);

class TropMatrix {
 public:
  explicit TropMatrix(std::size_t k) : k_(k), entries_(k * k) {}
  /// Throws PreconditionError unless rows form a square grid.
  explicit TropMatrix(const std::vector<std::vector<TropValue>>& rows);

  std::size_t size() const { return k_; }
  const TropValue& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * k_ + col];
  }
  TropValue& operator()(std::size_t row, std::size_t col) { return entries_[row * k_ + col]; }

 private:
  std::size_t k_;
  std::vector<TropValue> entries_;
};

struct TropDeterminant {
  TropValue value;
  /// At least two permutations attain the maximum, or the value is -inf.
  bool tie = false;
};

/// Largest matrix trop_det accepts; the enumeration visits k! permutations.
inline constexpr std::size_t kMaxDeterminantSize = 10;

/// max over permutations s of sum_i t(s(i), i), by enumerating all k!
/// permutations. Throws PreconditionError for k = 0 or k > kMaxDeterminantSize.
TropDeterminant trop_det(const TropMatrix& m);

/// Merge generators sharing an exponent (coefficient = max). Returns the
/// merged list in exponent order; `dominated` receives the number of inputs
/// that were strictly dominated by another generator with the same exponent.
std::vector<TropMonomial> merge_generators(std::span<const TropMonomial> gens,
                                           std::size_t* dominated = nullptr);

/// Whether g (up to scalar, after merging equal exponents) is an extremal of
/// the module generated by gens: decided by residuation. g is redundant iff
/// max_h ((g / h) h) == g over the other generators h, where g / h is
/// inf_x (g(x) - h(x)), which is -inf unless h and g share a slope.
/// Throws PreconditionError if no generator has g's exponent.
bool is_extremal(std::span<const TropMonomial> gens, const TropMonomial& g);

}  // namespace troptoric
