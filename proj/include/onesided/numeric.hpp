#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace onesided {

// All integer arithmetic in the library is exact and unbounded.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

}  // namespace onesided
