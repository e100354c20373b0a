#pragma once

#include <map>
#include <string>
#include <vector>

#include "wklr/rational.hpp"

namespace wklr {

// Integer Laurent polynomial in one variable q.  No zero coefficients are
// ever stored; the zero polynomial has an empty coefficient map.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(long constant) {
        if (constant != 0) coeffs_[0] = constant;
    }
    explicit LaurentPoly(const Integer& constant) {
        if (constant != 0) coeffs_[0] = constant;
    }

    static LaurentPoly monomial(long exponent, Integer coeff = Integer(1));
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(1); }

    bool isZero() const { return coeffs_.empty(); }
    bool isOne() const;

    const std::map<long, Integer>& coeffs() const { return coeffs_; }
    Integer coeff(long exponent) const;
    void setCoeff(long exponent, const Integer& c);

    long minExponent() const;  // requires nonzero
    long maxExponent() const;  // requires nonzero

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const { return coeffs_ < o.coeffs_; }

    Integer evalAtOne() const;

    // Ascending-exponent human-readable form, e.g. "q^-2+2+3q".
    std::string toString() const;

private:
    std::map<long, Integer> coeffs_;
};

// q^e |-> q^-e on every term.  A ring involution.
LaurentPoly bar(const LaurentPoly& f);

// [n]_q = (q^n - q^-n)/(q - q^-1); [0]=0, [-n] = -[n].
LaurentPoly qInt(long n);

// [n]_q! for n >= 0; throws InvalidInput for n < 0.
LaurentPoly qFactorial(long n);

// Balanced Gaussian binomial [n choose k]_q; 0 when k < 0 or k > n >= 0.
// Throws InvalidInput when n < 0.
LaurentPoly qBinomial(long n, long k);

// f+(q) + f+(q^-1) + f0, with f+ the strictly-positive-exponent part and f0
// the constant term.  Bar-invariant; f minus the result has only negative
// exponents.
LaurentPoly barSymmetrizeHead(const LaurentPoly& f);

// Exact quotient a/b in Z[q,q^-1]; throws DivisionFailure when b does not
// divide a (or b = 0).
LaurentPoly divideExact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace wklr
