#pragma once

#include <set>
#include <string>
#include <vector>

#include "wklr/partition.hpp"

namespace wklr {

// Bead positions {lambda_i - i + charge : i >= 1} of a charged partition,
// stored as the finite symmetric difference from {p < charge}: positions
// >= charge holding a bead ("extra") and positions < charge missing one.
class Abacus {
public:
    Abacus() = default;
    Abacus(long charge, std::set<long> extraBeads, std::set<long> missingBeads);

    long charge() const { return charge_; }
    const std::set<long>& extraBeads() const { return extra_; }
    const std::set<long>& missingBeads() const { return missing_; }

    bool hasBead(long position) const;

    // All beads >= lo (there are finitely many below any bound missing).
    std::vector<long> beadsAtLeast(long lo) const;

    // Sum over beads p >= charge of (p - charge) plus sum over gaps p < charge
    // of (charge - 1 - p)... equivalently the box count of the partition.
    long weight() const;

    bool operator==(const Abacus&) const = default;

    std::string toString() const;

private:
    long charge_ = 0;
    std::set<long> extra_;    // beads at positions >= the generic pattern
    std::set<long> missing_;  // gaps below the generic pattern
};

Abacus toAbacus(const Partition& lambda, long charge);
std::pair<Partition, long> fromAbacus(const Abacus& a);

// Runner j (0-based, j < e) receives the beads at positions a*e + j, at
// height a.  Charges of the runners sum to the charge of the input.
std::vector<Abacus> runnerSplit(const Abacus& a, long e);
Abacus runnerJoin(const std::vector<Abacus>& runners);

// The e-core obtained by pushing all beads down within their runners.
Partition eCore(const Partition& lambda, long charge, long e);

// l x e grid of runner abaci for a charged multipartition, with the charge
// matrix u, row sums s_i, column sums t_j, and the defect w = number of
// e-hooks stripped when passing to the row cores.
struct RunnerMatrix {
    long level = 0;
    long modulus = 0;
    std::vector<std::vector<Abacus>> grid;  // [component][runner]
    std::vector<std::vector<long>> u;       // charges of grid entries
    std::vector<long> rowSums;              // = input charges s_i
    std::vector<long> colSums;              // = dual charges t_j
    long defect = 0;
};

RunnerMatrix matrixU(const Multipartition& xi, const std::vector<long>& charges, long e);

// Transpose the l x e grid of runners: returns the dual e-multipartition and
// its level-e charges t.  Applying the flip twice (with l and e exchanged)
// is the identity.
std::pair<Multipartition, std::vector<long>> koszulFlip(const Multipartition& xi,
                                                        const std::vector<long>& charges,
                                                        long e);

// Number of grid columns/heights where component g (1-based) has a bead and
// component g+1 a gap at the same runner and height.
long pushCount(const Multipartition& xi, const std::vector<long>& charges, long e, long g);

}  // namespace wklr
