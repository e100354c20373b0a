#include "wklr/rational.hpp"

#include "wklr/errors.hpp"

namespace wklr {

Rational rationalFromString(const std::string& s) {
    if (s.empty()) throw InvalidInput("empty rational literal");
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw InvalidInput("cannot parse rational '" + s + "'");
    }
}

std::string rationalToString(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer rationalFloor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

}  // namespace wklr
