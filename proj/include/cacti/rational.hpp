#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cacti {

using Q = mpq_class;
using Z = mpz_class;

// Parses "p", "-p" or "p/q"; the result is canonicalized.
Q parse_rational(const std::string& s);
std::string to_string(const Q& q);
std::string to_string(const Z& z);

inline int sign_of(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace cacti
