#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cremona {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Scalar = mpq_class;
using Integer = mpz_class;

/// Builds num/den from decimal strings; throws StructuralError on bad digits or den == 0.
Scalar scalar_from_strings(std::string_view num, std::string_view den);

/// Parses "p", "-p" or "p/q".
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& q);

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

}  // namespace cremona
