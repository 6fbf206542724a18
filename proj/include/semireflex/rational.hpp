#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semireflex {

// Exact scalar types. Every quantity in the library is one of these two;
// no floating point is used anywhere in a computation.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_error : error {
    using error::error;
};

struct unbounded_error : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Largest integer <= r.
Int floor_int(const Rational& r);

/// Smallest integer >= r.
Int ceil_int(const Rational& r);

/// Nearest integer, halves rounded up.
Int round_int(const Rational& r);

/// Serializes as "p/q" with q > 0 and gcd(|p|, q) = 1; "/q" omitted when q = 1.
std::string to_string(const Rational& r);

std::string to_string(const Int& n);

/// Strict inverse of to_string: optional sign, digits, optional "/digits".
/// Throws parse_error on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Floor of the exact square root of a nonnegative integer.
Int isqrt(const Int& n);

}  // namespace semireflex
