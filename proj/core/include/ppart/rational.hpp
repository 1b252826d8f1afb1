#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

namespace ppart {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Sign of a rational as -1 / 0 / +1.
inline int sign_of(const Rat& x) { return x.sign(); }

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

// Parses "p/q", an integer, or a decimal such as "-3.25" (converted
// exactly). Returns nullopt on malformed input.
std::optional<Rat> parse_rational(const std::string& token);

// Canonical form: "p" for integers, "p/q" otherwise (q > 0).
std::string format_rational(const Rat& x);

// Exact conversion of a finite double to a rational (binary expansion),
// optionally simplified by continued fractions to keep denominators below
// max_den. The simplified value differs from x by at most 1/max_den.
Rat rational_from_double(double x);
Rat rational_approx(double x, const Int& max_den);

}  // namespace ppart
