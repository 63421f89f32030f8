#pragma once

// Global sections of O(D) on a smooth toric surface as the tropical module
// generated by the monomials x^m with div(x^m) + D >= 0, the two estimates
// h0_a / h0_b built from local slope counts, and the tropical Vandermonde
// section through prescribed points.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "troptoric/divisor.hpp"
#include "troptoric/trop.hpp"

namespace troptoric {

class SectionModule {
 public:
  SectionModule(ToricDivisor divisor, std::vector<LatticeVector> generators);

  const ToricDivisor& divisor() const { return divisor_; }
  const Fan& fan() const { return divisor_.fan(); }
  /// Exponents, pairwise distinct, ordered by (y, x).
  const std::vector<LatticeVector>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }

  /// The generator x^m as a function (coefficient 0).
  TropMonomial generator(std::size_t i) const;

 private:
  ToricDivisor divisor_;
  std::vector<LatticeVector> generators_;
};

/// Generators are the m with div(x^m) + D >= 0. Throws PreconditionError when
/// the fan is not smooth or P(D) is unbounded (the module is then not
/// finitely generated).
SectionModule global_sections(const ToricDivisor& d);

/// Number of distinct slopes among the generators at x, measured by exact
/// unit differences of each generator. Throws PreconditionError for an empty
/// module and std::logic_error if the count disagrees with the generator count.
std::size_t local_slope_count(const SectionModule& m, const Point& x);

/// Lower estimate: the generator count k, certified by l(x) = k at every
/// sampled point of U(M). 0 for the zero module.
std::size_t h0_a(const SectionModule& m);

/// Upper estimate: min over sampled points of the local slope count. 0 for
/// the zero module.
std::size_t h0_b(const SectionModule& m);

/// Points used by h0_a / h0_b: drawn from a fixed-seed generator, rejecting
/// points where two generators tie.
std::vector<Point> slope_sample_points(const SectionModule& m);

/// The section x -> det_trop(s_j(x); s_j(p_1); ...; s_j(p_{l-1})). Its
/// coefficient on generator i is the tropical cofactor: the determinant of
/// (s_j(p_k)) with column i removed. Requires l = size() >= 2 and exactly
/// l - 1 points, all bivariate.
TropPolynomial vandermonde_section(const SectionModule& m, std::span<const Point> points);

/// At least two distinct exponents of s attain its value at x, so s is not
/// smooth there. Throws PreconditionError for an empty polynomial.
bool passes_through(const TropPolynomial& s, const Point& x);

/// Largest module is_generic_configuration accepts.
inline constexpr std::size_t kMaxGenericityGenerators = 7;

/// True iff no cycle sum
///   l_{i_1..i_k}(x_1..x_k) = sum_j (s_{i_j}(x_j) - s_{i_{j+1}}(x_j)),  i_{k+1} = i_1,
/// vanishes for distinct generator indices i_1..i_k (k >= 2) evaluated at
/// distinct points x_j taken from `points`. Brute force; throws
/// PreconditionError when the module or the point list exceeds
/// kMaxGenericityGenerators.
bool is_generic_configuration(const SectionModule& m, std::span<const Point> points);

}  // namespace troptoric
