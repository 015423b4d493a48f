#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace detcoh {

// Exact arithmetic everywhere: integer coefficients are arbitrary precision,
// matrix entries (quiver module) are exact rationals.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exponents are machine-width, with overflow checked. Degrees in this
// library are bounded by m*n, far below overflow, but the check is free.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("exponent overflow in addition");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("exponent overflow in multiplication");
    return r;
}

// (-1)^k for any integer k.
inline Int sign_pow(long long k) {
    return (k % 2 == 0) ? Int(1) : Int(-1);
}

// Generalized binomial coefficient via the falling-factorial product,
// exact over Int. b < 0 gives 0; negative a is allowed (the identities
// here only reach it with b = 0).
inline Int binom(long long a, long long b) {
    if (b < 0) return 0;
    Int num = 1, den = 1;
    for (long long i = 0; i < b; ++i) {
        num *= Int(a - i);
        den *= Int(i + 1);
    }
    return num / den;
}

} // namespace detcoh
