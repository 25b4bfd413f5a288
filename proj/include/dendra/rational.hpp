#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dendra {

/// Exact rational scalar. GMP keeps values in lowest terms with a positive
/// denominator once canonicalized; every constructor path below does that.
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws SchemaError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace dendra
