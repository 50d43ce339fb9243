#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "permpat/errors.hpp"

namespace permpat {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// 2^e for e >= 0.
inline BigInt pow2(long long e) {
    if (e < 0) throw DomainError("pow2: negative exponent");
    BigInt one = 1;
    return one << static_cast<unsigned>(e);
}

inline BigInt factorial(long long n) {
    if (n < 0) throw DomainError("factorial: negative argument");
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Exact binomial coefficient by the multiplicative formula; each partial
/// product of i consecutive integers is divisible by i!, so every division
/// below is exact.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace permpat
