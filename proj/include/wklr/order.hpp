#pragma once

#include <map>
#include <vector>

#include "wklr/partition.hpp"
#include "wklr/weighting.hpp"

namespace wklr {

enum class Comparison { Equal, Greater, Less, Incomparable };

// Addable (removable) boxes of xi with residue r, sorted by x-coordinate
// ascending.  Throws DegenerateWeighting when two listed boxes share an
// x-coordinate.
std::vector<Box> addableBoxes(const Multipartition& xi, Residue r, const Weighting& w);
std::vector<Box> removableBoxes(const Multipartition& xi, Residue r, const Weighting& w);

// mu^r = #addable - #removable of residue r.
long weightPairing(Residue r, const Multipartition& xi, const Weighting& w);

// Weighted dominance comparison via per-residue prefix counts.  Returns
// Incomparable when the residue contents differ.
Comparison dominanceCompare(const Multipartition& xi, const Multipartition& eta,
                            const Weighting& w);

// Minus the sum of box x-coordinates.
Rational cFunction(const Multipartition& xi, const Weighting& w);

// Residue content as a map (representative in [0,e)) -> box count.
std::map<long, long> residueContent(const Multipartition& xi, const Weighting& w);

// All level-l multipartitions with the given residue content, ordered by
// descending c-function, then lexicographically.  The content fixes the
// total size.
std::vector<Multipartition> enumerateBlock(const Weighting& w,
                                           const std::map<long, long>& content);

// All l-multipartitions of size n in the same deterministic order.
std::vector<Multipartition> enumerateBySize(long n, long level, const Weighting& w);

// True when, for every multipartition of size <= n, the column order induced
// by wMid sits between the orders induced by wLo and wHi (no strict pair
// reversed against both ends).
bool betweenCheck(const Weighting& wLo, const Weighting& wMid, const Weighting& wHi, long n);

}  // namespace wklr
