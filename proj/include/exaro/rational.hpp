#pragma once

#include <gmpxx.h>

#include <string>

namespace exaro {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonicalized rational from a numerator/denominator pair.
inline Rat rat(long num, long den = 1)
{
	Rat r(num, den);
	r.canonicalize();
	return r;
}

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

std::string rat_str(const Rat& r);

inline double to_double(const Rat& r) { return r.get_d(); }

} // namespace exaro
