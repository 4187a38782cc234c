#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fracbound {

// Exact rational arithmetic.  All weightings, probabilities and LP data are
// kept exact; floating point enters only when logarithms are taken.
using Rational = mpq_class;

// Parses "p/q", "p", or a decimal literal like "0.25" into an exact rational.
// Throws parse_error on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical text form: "p/q" with q > 1, otherwise just "p".
std::string rational_to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

// Exact binomial coefficient as a rational (denominator 1).
Rational binomial(int n, int k);

// Sum of a rational vector.
Rational rational_sum(const std::vector<Rational>& values);

}  // namespace fracbound
