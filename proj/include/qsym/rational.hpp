#pragma once

#include <gmpxx.h>

#include <string>

namespace qsym {

// Exact rational; GMP keeps it in lowest terms with a positive denominator.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
	Rational r(num, den);
	r.canonicalize();
	return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace qsym
