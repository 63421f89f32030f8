#pragma once

// Exact rational numbers. Every comparison in the library that can produce a
// tie goes through this type; there is no floating point anywhere in the core.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace troptoric {

using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise (q > 0, lowest terms).
std::string to_string(const Rational& r);

/// Accepts "p", "-p" or "p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// num/den in lowest terms; den must be nonzero.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::int64_t floor_to_int(const Rational& r);
std::int64_t ceil_to_int(const Rational& r);

/// Throws std::overflow_error if the value does not fit.
std::int64_t to_int64(const Rational& r);

}  // namespace troptoric
