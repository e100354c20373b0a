#include "wklr/weighting.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wklr/errors.hpp"

namespace wklr {

Weighting::Weighting(Rational kappa, std::vector<Rational> theta, std::vector<long> charges,
                     long modulus)
    : kappa_(std::move(kappa)), theta_(std::move(theta)), charges_(std::move(charges)) {
    if (kappa_ == 0) throw InvalidInput("kappa must be nonzero");
    if (theta_.size() != charges_.size())
        throw InvalidInput("theta and charges must have equal length");
    if (theta_.empty()) throw InvalidInput("weighting needs at least one component");
    for (std::size_t i = 0; i < theta_.size(); ++i)
        for (std::size_t j = i + 1; j < theta_.size(); ++j)
            if (theta_[i] == theta_[j]) throw InvalidInput("theta values must be pairwise distinct");
    if (modulus < 0) throw InvalidInput("modulus must be positive");
    if (modulus == 0) {
        e_ = static_cast<long>(kappa_.get_den().get_si());
        if (e_ < 1) e_ = 1;
    } else {
        e_ = modulus;
    }
}

Residue Weighting::residue(const Box& b) const {
    return Residue{modEuclid(charge(b.component) + b.row - b.col, e_)};
}

Rational Weighting::xCoord(const Box& b) const {
    return theta(b.component) + kappa_ * makeRational(b.col - b.row);
}

bool Weighting::isUglov() const {
    if (kappa_ != makeRational(1, e_) && kappa_ != makeRational(-1, e_)) return false;
    for (long j = 0; j < level(); ++j) {
        Rational expect = kappa_ * makeRational(charge(j)) -
                          makeRational(j + 1) * makeRational(e_) * kappa_ / makeRational(level());
        if (theta(j) != expect) return false;
    }
    return true;
}

std::string Weighting::toString() const {
    std::ostringstream out;
    out << "kappa=" << rationalToString(kappa_) << " theta=(";
    for (long j = 0; j < level(); ++j) {
        if (j) out << ",";
        out << rationalToString(theta(j));
    }
    out << ") s=(";
    for (long j = 0; j < level(); ++j) {
        if (j) out << ",";
        out << charge(j);
    }
    out << ") e=" << e_;
    return out.str();
}

Weighting uglovWeighting(const std::vector<long>& charges, long e, int sign) {
    if (e < 1) throw InvalidInput("modulus must be at least 1");
    if (sign != 1 && sign != -1) throw InvalidInput("sign must be +-1");
    const long l = static_cast<long>(charges.size());
    Rational kappa = makeRational(sign, e);
    std::vector<Rational> theta;
    theta.reserve(charges.size());
    for (long j = 0; j < l; ++j)
        theta.push_back(kappa * makeRational(charges[static_cast<std::size_t>(j)]) -
                        makeRational(j + 1) * makeRational(e) * kappa / makeRational(l));
    return Weighting(kappa, std::move(theta), charges, e);
}

Weighting uglovate(const Weighting& w) {
    const long l = w.level();
    const long e = w.modulus();
    const int sign = w.kappa() > 0 ? 1 : -1;

    // h_j: smallest nonnegative integer with s_j - s_1 = h_j mod e.
    std::vector<long> h(static_cast<std::size_t>(l));
    for (long j = 0; j < l; ++j) h[static_cast<std::size_t>(j)] = modEuclid(w.charge(j) - w.charge(0), e);

    // Reindex components other than the first so that theta_j/kappa - h_j
    // are cyclically ordered mod e.
    std::vector<long> order(static_cast<std::size_t>(l));
    std::iota(order.begin(), order.end(), 0);
    auto phase = [&](long j) -> Rational {
        Rational v = w.theta(j) / w.kappa() - makeRational(h[static_cast<std::size_t>(j)]);
        Rational m = v - makeRational(e) * Rational(rationalFloor(v / makeRational(e)));
        return m;  // representative in [0, e)
    };
    // Uglov weightings carry phases -j*e/l mod e, a descending cycle, so the
    // reindexing uses the descending orientation anchored at the first
    // component's phase.
    Rational p0 = phase(0);
    std::sort(order.begin() + 1, order.end(), [&](long a, long b) {
        auto key = [&](long j) {
            Rational p = phase(j);
            return std::pair<int, Rational>(p > p0 ? 1 : 0, -p);
        };
        auto ka = key(a), kb = key(b);
        if (ka != kb) return ka < kb;
        return a < b;
    });

    // The printed charge formula omits the -j*e*kappa/l drift that the Uglov
    // theta formula bakes in, so taken literally it moves even exact Uglov
    // inputs to a different charge.  Work in drift-corrected coordinates
    // raw_j = theta_j/kappa + j*e/l, in which an Uglov weighting of charge s
    // has raw_j - raw_1 = s_j - s_1 exactly.
    std::vector<long> charges(static_cast<std::size_t>(l));
    charges[0] = 0;
    auto raw = [&](long j, long pos) -> Rational {
        return w.theta(j) / w.kappa() +
               makeRational(pos + 1) * makeRational(e) / makeRational(l);
    };
    Rational base = raw(order[0], 0);
    for (long idx = 1; idx < l; ++idx) {
        long j = order[static_cast<std::size_t>(idx)];
        Rational t = (raw(j, idx) - base - makeRational(h[static_cast<std::size_t>(j)])) /
                     makeRational(e);
        charges[static_cast<std::size_t>(idx)] =
            h[static_cast<std::size_t>(j)] + e * rationalFloor(t).get_si();
    }
    return uglovWeighting(charges, e, sign);
}

Weighting braidOnWeighting(long g, const Weighting& w) {
    if (!w.isUglov()) throw InvalidInput("braid generators act on Uglov weightings only");
    const long l = w.level();
    if (g < 0 || g >= l) throw InvalidInput("braid generator out of range");
    std::vector<long> s = w.charges();
    const long e = w.modulus();
    if (g == 0) {
        std::swap(s.front(), s.back());
    } else {
        long a = s[static_cast<std::size_t>(g - 1)];
        long b = s[static_cast<std::size_t>(g)];
        s[static_cast<std::size_t>(g - 1)] = b - e;
        s[static_cast<std::size_t>(g)] = a + e;
    }
    return uglovWeighting(s, e, w.kappa() > 0 ? 1 : -1);
}

Multipartition braidOnMultipartition(long g, const Multipartition& xi) {
    std::vector<Partition> comps = xi.components();
    if (g == 0)
        std::swap(comps.front(), comps.back());
    else
        std::swap(comps[static_cast<std::size_t>(g - 1)], comps[static_cast<std::size_t>(g)]);
    return Multipartition(std::move(comps));
}

Weighting starWeighting(const Weighting& w) {
    if (!w.isUglov()) throw InvalidInput("starWeighting expects an Uglov weighting");
    const long l = w.level();
    std::vector<long> s(static_cast<std::size_t>(l));
    for (long j = 0; j < l; ++j) s[static_cast<std::size_t>(j)] = -w.charge(l - 1 - j);
    return uglovWeighting(s, w.modulus(), w.kappa() > 0 ? -1 : 1);
}

}  // namespace wklr
