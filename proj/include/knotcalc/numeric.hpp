#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace knotcalc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int rat_floor(const Rat& x) {
    return floor_div(numerator(x), denominator(x));
}

inline Int rat_ceil(const Rat& x) {
    return -rat_floor(-x);
}

// nearest integer, ties round up
inline Int rat_round(const Rat& x) {
    return rat_floor(x + Rat(1, 2));
}

inline Int gcd(Int a, Int b) {
    return boost::multiprecision::gcd(a, b);
}

} // namespace knotcalc
