#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace seaweed {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline bool is_perfect_square(const BigInt& v) {
    if (v < 0) return false;
    BigInt r = boost::multiprecision::sqrt(v);
    return r * r == v;
}

}  // namespace seaweed
