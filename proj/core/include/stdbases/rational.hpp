#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace stdbases {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "p" when the denominator is 1, "p/q" otherwise.
inline std::string rational_to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Combinatorial binomial coefficient: zero when n < 0, k < 0 or k > n.
Integer binomial(long long n, long long k);

}  // namespace stdbases
