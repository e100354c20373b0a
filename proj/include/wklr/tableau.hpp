#pragma once

#include <map>
#include <string>
#include <vector>

#include "wklr/partition.hpp"
#include "wklr/weighting.hpp"

namespace wklr {

// A point on the tilted real line: real part plus a coefficient of the
// formal infinitesimal tilt.  Ordered lexicographically.
struct EntryPos {
    Rational real;
    long eps = 0;

    bool operator==(const EntryPos& o) const { return eps == o.eps && real == o.real; }
    bool operator!=(const EntryPos& o) const { return !(*this == o); }
    bool operator<(const EntryPos& o) const {
        if (real != o.real) return real < o.real;
        return eps < o.eps;
    }
    bool operator>(const EntryPos& o) const { return o < *this; }
    bool operator<=(const EntryPos& o) const { return !(o < *this); }
    bool operator>=(const EntryPos& o) const { return !(*this < o); }

    EntryPos shifted(const Rational& dx) const { return EntryPos{real + dx, eps}; }
    std::string toString() const;
};

// Finitely many labeled points on the line.
class Loading {
public:
    Loading() = default;
    explicit Loading(std::vector<std::pair<EntryPos, Residue>> points);

    const std::vector<std::pair<EntryPos, Residue>>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    std::map<long, long> residueContent() const;

    bool operator==(const Loading&) const = default;
    std::string toString() const;

private:
    std::vector<std::pair<EntryPos, Residue>> points_;  // sorted by position
};

// A filling of a multipartition diagram by positions.
struct ITableau {
    Multipartition shape;
    Weighting weighting;
    std::map<Box, EntryPos> fill;

    const EntryPos& entry(const Box& b) const { return fill.at(b); }
    std::string toString() const;
};

// Position of a diagram slot in the canonical loading: the box (r,c,m)
// (0-based) sits at (theta_m + kappa*(c-r), r+c+2).
EntryPos slotPosition(const Box& b, const Weighting& w);

// One labeled point per box of xi at its slot position.  Throws
// DegenerateWeighting when two points collide.
Loading canonicalLoading(const Multipartition& xi, const Weighting& w);

// The filling of xi by its own slot positions.
ITableau tautologicalTableau(const Multipartition& xi, const Weighting& w);

// All fillings of xi by the entries (each used once) satisfying the slope
// conditions; residues ignored.  Deterministic order.
std::vector<ITableau> enumerateDTableaux(const Multipartition& xi,
                                         const std::vector<EntryPos>& entries,
                                         const Weighting& w);

// D-tableaux additionally matching box residues to the loading labels.
std::vector<ITableau> enumerateITableaux(const Multipartition& xi, const Loading& loading,
                                         const Weighting& w);

enum class RelStatus { Addable, Removable, Neither };

// Status of a lattice slot (inside or outside the shape) relative to the
// threshold h under the filling of S.  Missing neighbours satisfy their
// inequality; a corner slot (first row and column) is addable only when
// theta_m < h.
RelStatus relativeStatus(const ITableau& S, const Box& slot, const EntryPos& h);

// Degree statistic: sum over boxes b of (#same-residue slots right of b
// removable relative to entry(b)) - (#addable likewise).  Chosen so graded
// decomposition matrices are sums of q^degree directly.
long tableauDegree(const ITableau& S);

// Residues of the boxes read in ascending slot-position order.
std::vector<Residue> russianReadingWord(const ITableau& S);

// The far-apart entry set {s, 2s, ..., m*s} as plain positions.
std::vector<EntryPos> farApartEntries(const Rational& s, long m);

// Candidate slots for relative status scans: the shape's boxes together
// with its classically addable positions.
std::vector<Box> statusSlots(const Multipartition& xi);

}  // namespace wklr
