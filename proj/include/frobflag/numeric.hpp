#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace frobflag {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline std::string to_decimal(const Rational& v) {
    if (boost::multiprecision::denominator(v) == 1) {
        return boost::multiprecision::numerator(v).str();
    }
    return boost::multiprecision::numerator(v).str() + "/" +
           boost::multiprecision::denominator(v).str();
}

// C(n, k) with the convention C(n, k) = 0 for n < k or k < 0.
BigInt binomial(long long n, long long k);

} // namespace frobflag
