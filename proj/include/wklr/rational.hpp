#pragma once

#include <gmpxx.h>

#include <string>

namespace wklr {

// Exact rationals, always canonicalized (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Rational rationalFromString(const std::string& s);

// "p" for integers, "p/q" otherwise.
std::string rationalToString(const Rational& r);

inline Rational makeRational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline long floorDiv(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long modEuclid(long a, long b) { return a - b * floorDiv(a, b); }

// floor(a) for a rational a.
Integer rationalFloor(const Rational& r);

}  // namespace wklr
