#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wklr/laurent.hpp"
#include "wklr/order.hpp"
#include "wklr/tableau.hpp"

namespace wklr {

// A matrix of Laurent polynomials with multipartition row labels.
struct GradedMatrix {
    std::vector<Multipartition> rows;
    std::vector<Multipartition> cols;
    std::vector<std::vector<LaurentPoly>> entries;  // [row][col]

    const LaurentPoly& at(std::size_t r, std::size_t c) const { return entries[r][c]; }
    std::string toString() const;
};

// Graded count of loading-tableaux on xi: sum of q^degree.
LaurentPoly gradedCellDim(const Multipartition& xi, const Loading& loading, const Weighting& w);

// Graded dimension of the Hom space between the two loading idempotents,
// summed over all shapes of the matching residue content.
LaurentPoly gradedHomDim(const Loading& a, const Loading& b, const Weighting& w);

// Same statistics for an unlabeled entry set: every filling contributes,
// labels induced by the boxes.
LaurentPoly dSetCellDim(const Multipartition& xi, const std::vector<EntryPos>& entries,
                        const Weighting& w);
LaurentPoly dSetHomDim(const std::vector<EntryPos>& a, const std::vector<EntryPos>& b,
                       const Weighting& w);

// Column eta = graded tableau counts for the canonical loading of eta, rows
// and columns running over the block in its deterministic order.
GradedMatrix standardMultiplicityColumns(const std::vector<Multipartition>& block,
                                         const Weighting& w);

// Extract the canonical-basis columns from projective columns: walking the
// block from the top, repeatedly strip the bar-invariant head of each
// coefficient.  Throws PeelFailure when a stripped head has a negative
// coefficient or a diagonal is not exactly 1.
GradedMatrix peelCanonicalBasis(const GradedMatrix& M, const Weighting& w);

// Graded decomposition matrix of the block: peeled canonical columns.
GradedMatrix decompositionMatrix(const std::vector<Multipartition>& block, const Weighting& w);

// Restriction: one entry per removable box of residue r, left to right,
// with its grading shift.  Induction likewise over addable boxes.
std::vector<std::pair<Multipartition, long>> branchRestrict(const Multipartition& xi, Residue r,
                                                            const Weighting& w);
std::vector<std::pair<Multipartition, long>> branchInduce(const Multipartition& xi, Residue r,
                                                          const Weighting& w);

// Degree of the strand diagram of a tableau, computed from crossings
// (strand/ghost/red with the label rules).  Equals tableauDegree.
long crossingDegree(const ITableau& S);

// Degree of the identity-correspondence diagram from xi placed by wBottom to
// xi placed by wTop; componentMap[m] gives the top component of bottom
// component m (identity by default).  Minus this value counts pushable
// abacus positions for a braid step.
long interpolationDegree(const Multipartition& xi, const Weighting& wTop,
                         const Weighting& wBottom,
                         const std::vector<long>* componentMap = nullptr);

// Interpolation degree across the braid generator g: top data is the
// g-swapped multipartition under the g-swapped weighting.
long braidInterpolationDegree(const Multipartition& xi, long g, const Weighting& w);

}  // namespace wklr
