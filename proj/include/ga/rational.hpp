#pragma once

#include <gmpxx.h>
#include <string>

namespace ga {

// Exact arbitrary-precision rational scalar. Every computation in this
// library is exact; there are no tolerances anywhere.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Reduced "a" or "a/b" form, b > 0.
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "a" or "a/b" with optional leading '-' on a and b > 0.
Rational rational_from_string(const std::string& s);

}  // namespace ga
