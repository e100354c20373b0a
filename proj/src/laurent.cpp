#include "wklr/laurent.hpp"

#include <sstream>

#include "wklr/errors.hpp"

namespace wklr {

LaurentPoly LaurentPoly::monomial(long exponent, Integer coeff) {
    LaurentPoly f;
    if (coeff != 0) f.coeffs_[exponent] = std::move(coeff);
    return f;
}

bool LaurentPoly::isOne() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

Integer LaurentPoly::coeff(long exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Integer(0) : it->second;
}

void LaurentPoly::setCoeff(long exponent, const Integer& c) {
    if (c == 0)
        coeffs_.erase(exponent);
    else
        coeffs_[exponent] = c;
}

long LaurentPoly::minExponent() const { return coeffs_.begin()->first; }
long LaurentPoly::maxExponent() const { return coeffs_.rbegin()->first; }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly f;
    for (const auto& [e, c] : coeffs_) f.coeffs_[e] = -c;
    return f;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_[e] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly f;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            long e = ea + eb;
            auto it = f.coeffs_.find(e);
            if (it == f.coeffs_.end()) {
                Integer c = ca * cb;
                if (c != 0) f.coeffs_[e] = std::move(c);
            } else {
                it->second += ca * cb;
                if (it->second == 0) f.coeffs_.erase(it);
            }
        }
    return f;
}

Integer LaurentPoly::evalAtOne() const {
    Integer s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

std::string LaurentPoly::toString() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first && c > 0) out << "+";
        if (e == 0) {
            out << c.get_str();
        } else {
            if (c == -1)
                out << "-";
            else if (c != 1)
                out << c.get_str();
            out << "q";
            if (e != 1) out << "^" << e;
        }
        first = false;
    }
    return out.str();
}

LaurentPoly bar(const LaurentPoly& f) {
    LaurentPoly g;
    for (const auto& [e, c] : f.coeffs()) g.setCoeff(-e, c);
    return g;
}

LaurentPoly qInt(long n) {
    LaurentPoly f;
    if (n == 0) return f;
    long a = n > 0 ? n : -n;
    // [a]_q = q^(a-1) + q^(a-3) + ... + q^(1-a)
    for (long e = 1 - a; e <= a - 1; e += 2) f.setCoeff(e, 1);
    return n > 0 ? f : -f;
}

LaurentPoly qFactorial(long n) {
    if (n < 0) throw InvalidInput("qFactorial of negative argument");
    LaurentPoly f = LaurentPoly::one();
    for (long m = 2; m <= n; ++m) f *= qInt(m);
    return f;
}

LaurentPoly qBinomial(long n, long k) {
    if (n < 0) throw InvalidInput("qBinomial with negative upper argument");
    if (k < 0 || k > n) return LaurentPoly::zero();
    return divideExact(qFactorial(n), qFactorial(k) * qFactorial(n - k));
}

LaurentPoly barSymmetrizeHead(const LaurentPoly& f) {
    LaurentPoly g;
    for (const auto& [e, c] : f.coeffs()) {
        if (e > 0) {
            g.setCoeff(e, c);
            g.setCoeff(-e, g.coeff(-e) + c);
        } else if (e == 0) {
            g.setCoeff(0, g.coeff(0) + c);
        }
    }
    return g;
}

LaurentPoly divideExact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.isZero()) throw DivisionFailure("division by zero polynomial");
    if (a.isZero()) return LaurentPoly::zero();
    // Shift so that both operands are ordinary polynomials, divide from the
    // top, and shift the quotient back.
    const long shift = a.minExponent() - b.minExponent();
    LaurentPoly rem = a;
    LaurentPoly quot;
    const long eb = b.maxExponent();
    const long lowLimit = b.minExponent() + shift;
    const Integer& cb = b.coeffs().rbegin()->second;
    while (!rem.isZero() && rem.maxExponent() - eb >= shift) {
        long ea = rem.maxExponent();
        Integer ca = rem.coeffs().rbegin()->second;
        Integer q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        if (r != 0) throw DivisionFailure("leading coefficient not divisible");
        LaurentPoly term = LaurentPoly::monomial(ea - eb, q);
        quot += term;
        rem -= term * b;
        if (!rem.isZero() && rem.minExponent() < lowLimit)
            throw DivisionFailure("no exact quotient exists");
    }
    if (!rem.isZero()) throw DivisionFailure("nonzero remainder");
    return quot;
}

}  // namespace wklr
