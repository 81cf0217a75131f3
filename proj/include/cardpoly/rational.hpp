#ifndef CARDPOLY_RATIONAL_HPP
#define CARDPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cardpoly {

/// Exact rational number. GMP keeps every value canonical: the denominator
/// is positive and coprime to the numerator.
using Rational = mpq_class;
using Integer = mpz_class;

using RationalVector = std::vector<Rational>;

/// Parses "p", "p/q" or "-p/q". Throws InvalidParameter on malformed input
/// or a zero denominator.
Rational parse_rational(const std::string &text);

std::string to_string(const Rational &q);

/// Rational from numerator and denominator; rejects a zero denominator.
Rational make_rational(const Integer &num, const Integer &den);

inline bool is_integral(const Rational &q) { return q.get_den() == 1; }

} // namespace cardpoly

#endif
