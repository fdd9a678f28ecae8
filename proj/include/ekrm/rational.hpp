#pragma once

#include <gmpxx.h>

#include <string>

namespace ekrm {

/// Exact rational, always canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& text);

}  // namespace ekrm
