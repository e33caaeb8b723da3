#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace annular {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline std::string to_string(const Rational& r) { return r.str(); }

} // namespace annular
