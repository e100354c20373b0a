#pragma once

#include <string>
#include <vector>

#include "wklr/partition.hpp"
#include "wklr/rational.hpp"

namespace wklr {

// A residue class modulo e, stored as its representative in [0, e).
struct Residue {
    long value = 0;

    bool operator==(const Residue&) const = default;
    auto operator<=>(const Residue&) const = default;
};

// The full parameter pack: anchor positions theta_m for the components, the
// diagonal slope kappa, integer charges s_m fixing residues mod e.
class Weighting {
public:
    Weighting() = default;
    // e = 0 means "derive from the denominator of kappa".
    Weighting(Rational kappa, std::vector<Rational> theta, std::vector<long> charges,
              long modulus = 0);

    long level() const { return static_cast<long>(theta_.size()); }
    long modulus() const { return e_; }
    const Rational& kappa() const { return kappa_; }
    const std::vector<Rational>& theta() const { return theta_; }
    const Rational& theta(long m) const { return theta_[static_cast<std::size_t>(m)]; }
    const std::vector<long>& charges() const { return charges_; }
    long charge(long m) const { return charges_[static_cast<std::size_t>(m)]; }

    Residue residue(const Box& b) const;
    Rational xCoord(const Box& b) const;

    // Uglov test: kappa = +-1/e and theta_j = kappa*s_j - j*e*kappa/level
    // (with 1-based j).
    bool isUglov() const;

    std::string toString() const;

private:
    Rational kappa_;
    std::vector<Rational> theta_;
    std::vector<long> charges_;
    long e_ = 1;
};

// The Uglov weighting of a charge: kappa = sign/e, theta_j = kappa s_j - j e kappa / l.
Weighting uglovWeighting(const std::vector<long>& charges, long e, int sign);

// Replace an arbitrary connected weighting by the Uglov weighting produced
// by the displayed charge formula (with the cyclic component reindexing
// step folded in).  The formula can land on a charge whose Uglov weighting
// has coincident theta values; callers relying on order preservation should
// treat that as a genuine degeneration of the input.
Weighting uglovate(const Weighting& w);

// Affine braid generator g in {0,...,level-1} acting on Uglov weightings.
// g >= 1: (s_g, s_{g+1}) -> (s_{g+1} - e, s_g + e) (1-based components
// g, g+1); g = 0: plain swap of the first and last charges.  Throws
// InvalidInput on non-Uglov input.
Weighting braidOnWeighting(long g, const Weighting& w);

// For g >= 1 the braid generator also permutes the components of a
// multipartition (component g <-> g+1, 1-based); g = 0 swaps first and last.
Multipartition braidOnMultipartition(long g, const Multipartition& xi);

// s -> (-s_l, ..., -s_1), kappa -> -kappa, components reversed.
Weighting starWeighting(const Weighting& w);

}  // namespace wklr
