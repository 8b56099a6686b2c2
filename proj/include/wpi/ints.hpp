#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace wpi {

// Edge weights and monomial exponents. Weights are unbounded positive
// integers, so everything downstream of them is arbitrary precision.
using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

}  // namespace wpi
