#ifndef GOTZMANN_RATIONAL_HPP
#define GOTZMANN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gotzmann {

/// Exact rational number. GMP keeps every arithmetic result canonical
/// (lowest terms, positive denominator); values built from raw parts go
/// through make_rational so the invariant holds everywhere.
using BigRational = mpq_class;
using BigInt = mpz_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

/// Accepts "n", "-n", "p/q" with optional surrounding whitespace.
BigRational parse_rational(std::string_view text);

/// "p/q" or "n"; inverse of parse_rational.
std::string to_string(const BigRational& q);

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

/// q^e for e >= 0 (0^0 = 1).
BigRational pow(const BigRational& q, unsigned long e);

BigInt lcm_of_denominators(const BigRational* first, const BigRational* last);

} // namespace gotzmann

#endif
