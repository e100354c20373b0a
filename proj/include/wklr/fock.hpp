#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wklr/cellular.hpp"
#include "wklr/laurent.hpp"
#include "wklr/order.hpp"

namespace wklr {

// Finitely supported vector in the level-l q-Fock space.
class FockVector {
public:
    FockVector() = default;
    explicit FockVector(Weighting w) : weighting_(std::move(w)) {}
    static FockVector basis(const Multipartition& xi, const Weighting& w) {
        FockVector v(w);
        v.add(xi, LaurentPoly::one());
        return v;
    }

    const Weighting& weighting() const { return weighting_; }
    const std::map<Multipartition, LaurentPoly>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    void add(const Multipartition& xi, const LaurentPoly& c);
    LaurentPoly coeff(const Multipartition& xi) const;

    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    FockVector operator*(const LaurentPoly& c) const;
    bool operator==(const FockVector& o) const { return terms_ == o.terms_; }

    std::string toString() const;

private:
    Weighting weighting_;
    std::map<Multipartition, LaurentPoly> terms_;
};

// Chevalley operators: F adds boxes of residue r with coefficient q^(-m),
// E removes them with q^(+n); m/n count addable-minus-removable boxes of
// the source multipartition strictly right/left of the moved box.
FockVector applyF(Residue r, const FockVector& v);
FockVector applyE(Residue r, const FockVector& v);

// op applied a times, divided exactly by [a]_q!.
enum class Chevalley { E, F };
FockVector dividedPower(Chevalley op, Residue r, long a, const FockVector& v);

// Weighted crystal operators and string lengths (eps, phi) = uncancelled
// open/close parenthesis counts.
std::optional<Multipartition> crystalF(Residue r, const Multipartition& xi, const Weighting& w);
std::optional<Multipartition> crystalE(Residue r, const Multipartition& xi, const Weighting& w);
std::pair<long, long> stringLengths(Residue r, const Multipartition& xi, const Weighting& w);

// Quantum Weyl group element: sum over a-b+c = mu of
// (-1)^(a+c) q^(ac-b) E^(a) F^(b) E^(c), applied weight-component-wise.
FockVector quantumWeylT(Residue r, const FockVector& v);

// Level-rank dual operators: push beads between adjacent runners of the
// component abacus (generator g, 1-based runner pair g -> g+1; g = 0 wraps).
// The result lives in the Fock space of the pushed charge.
FockVector dualApplyF(long g, const FockVector& v);
FockVector dualApplyE(long g, const FockVector& v);

// Dual-side weight: pushable sites g -> g+1 minus sites g+1 -> g.
long dualWeightPairing(long g, const Multipartition& xi, const Weighting& w);

// Quantum Weyl group element of the dual action.
FockVector dualQuantumWeylT(long g, const FockVector& v);

// Canonical-basis package of one block: shapes in block order and the
// matrix of canonical basis vectors in standard coordinates.
struct BlockBasisData {
    std::vector<Multipartition> block;
    Weighting weighting;
    GradedMatrix canonical;

    std::size_t indexOf(const Multipartition& xi) const;
};

BlockBasisData blockBasis(const Weighting& w, const std::map<long, long>& content);

// Antilinear bar involution fixing every canonical basis vector.
FockVector barOnBlock(const BlockBasisData& data, const FockVector& v);

// <u, v> = (bar u, v), standard basis orthonormal for (,).
LaurentPoly sesquiForm(const BlockBasisData& data, const FockVector& u, const FockVector& v);

// Mutation of the standard basis to a new total order (a permutation of the
// block indices): the unique basis v' with v'_i in span{v_j : j >=' i},
// v'_i = v_i mod span{v_j : j >' i}, semi-orthogonal for the new order.
GradedMatrix mutateBasis(const BlockBasisData& data, const std::vector<std::size_t>& newOrder);

}  // namespace wklr
