#pragma once

// Exact integer and rational helpers shared by the whole library.
// Everything downstream is computed over Z and Q; no floating point
// enters until SVG emission.

#include <gmpxx.h>

#include <string>

namespace hurwitz {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign(const Int& v) { return sgn(v); }
inline int sign(const Rat& v) { return sgn(v); }

// floor(a / b), b != 0
Int floor_div(const Int& a, const Int& b);

// largest integer <= r
Int rat_floor(const Rat& r);

// floor(sqrt(n)), n >= 0
Int isqrt(const Int& n);

// true iff n is a perfect square; optionally returns the root
bool perfect_square(const Int& n, Int* root = nullptr);

Rat make_rat(long num, long den = 1);
Rat make_rat(const Int& num, const Int& den);

// accepts "p" or "p/q" with an optional leading sign; throws
// std::invalid_argument on anything else (no decimals by design)
Rat parse_rational(const std::string& text);

// lowest terms, "p" or "p/q"
std::string to_string(const Rat& r);

}  // namespace hurwitz
