#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mayer {

// All identity arithmetic is exact; these never overflow.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

// "p/q" with the denominator always present, e.g. "-3/1".
std::string rational_str(const Rational& r);

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }
inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

} // namespace mayer
