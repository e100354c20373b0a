#include "wklr/cellular.hpp"

#include <algorithm>
#include <sstream>

#include "wklr/errors.hpp"

namespace wklr {

std::string GradedMatrix::toString() const {
    std::ostringstream out;
    std::size_t width = 0;
    std::vector<std::vector<std::string>> cells(entries.size());
    for (std::size_t r = 0; r < entries.size(); ++r) {
        for (const auto& e : entries[r]) {
            cells[r].push_back(e.toString());
            width = std::max(width, cells[r].back().size());
        }
    }
    for (std::size_t r = 0; r < cells.size(); ++r) {
        out << rows[r].toString() << " : ";
        for (std::size_t c = 0; c < cells[r].size(); ++c) {
            if (c) out << "  ";
            out << std::string(width - cells[r][c].size(), ' ') << cells[r][c];
        }
        out << "\n";
    }
    return out.str();
}

LaurentPoly gradedCellDim(const Multipartition& xi, const Loading& loading, const Weighting& w) {
    LaurentPoly dim;
    for (const ITableau& t : enumerateITableaux(xi, loading, w))
        dim += LaurentPoly::monomial(tableauDegree(t));
    return dim;
}

LaurentPoly gradedHomDim(const Loading& a, const Loading& b, const Weighting& w) {
    if (a.residueContent() != b.residueContent()) return LaurentPoly::zero();
    LaurentPoly dim;
    for (const Multipartition& xi : enumerateBlock(w, a.residueContent()))
        dim += gradedCellDim(xi, a, w) * gradedCellDim(xi, b, w);
    return dim;
}

LaurentPoly dSetCellDim(const Multipartition& xi, const std::vector<EntryPos>& entries,
                        const Weighting& w) {
    LaurentPoly dim;
    if (static_cast<long>(entries.size()) != xi.size()) return dim;
    for (const ITableau& t : enumerateDTableaux(xi, entries, w))
        dim += LaurentPoly::monomial(tableauDegree(t));
    return dim;
}

LaurentPoly dSetHomDim(const std::vector<EntryPos>& a, const std::vector<EntryPos>& b,
                       const Weighting& w) {
    if (a.size() != b.size()) return LaurentPoly::zero();
    LaurentPoly dim;
    for (const Multipartition& xi : multipartitionsOf(static_cast<long>(a.size()), w.level()))
        dim += dSetCellDim(xi, a, w) * dSetCellDim(xi, b, w);
    return dim;
}

GradedMatrix standardMultiplicityColumns(const std::vector<Multipartition>& block,
                                         const Weighting& w) {
    GradedMatrix M;
    M.rows = block;
    M.cols = block;
    M.entries.assign(block.size(), std::vector<LaurentPoly>(block.size()));
    for (std::size_t c = 0; c < block.size(); ++c) {
        Loading loading = canonicalLoading(block[c], w);
        for (std::size_t r = 0; r < block.size(); ++r)
            M.entries[r][c] = gradedCellDim(block[r], loading, w);
    }
    return M;
}

GradedMatrix peelCanonicalBasis(const GradedMatrix& M, const Weighting&) {
    const std::size_t n = M.rows.size();
    GradedMatrix B = M;
    // Columns in block order, most dominant first.  Subtract already-peeled
    // columns scaled by the bar-invariant head of the matching coefficient.
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t mu = 0; mu < c; ++mu) {
            LaurentPoly head = barSymmetrizeHead(B.entries[mu][c]);
            if (head.isZero()) continue;
            for (const auto& [e, coef] : head.coeffs())
                if (coef < 0)
                    throw PeelFailure("negative multiplicity while peeling column " +
                                      M.rows[c].toString());
            for (std::size_t r = 0; r < n; ++r)
                B.entries[r][c] -= head * B.entries[r][mu];
        }
        if (!B.entries[c][c].isOne())
            throw PeelFailure("diagonal entry is not 1 at " + M.rows[c].toString());
        for (std::size_t r = c + 1; r < n; ++r)
            if (!barSymmetrizeHead(B.entries[r][c]).isZero())
                throw PeelFailure("unpeelable lower coefficient at " + M.rows[r].toString());
    }
    return B;
}

GradedMatrix decompositionMatrix(const std::vector<Multipartition>& block, const Weighting& w) {
    return peelCanonicalBasis(standardMultiplicityColumns(block, w), w);
}

namespace {

long countRight(const std::vector<Box>& boxes, const Box& pivot, const Weighting& w) {
    const Rational x = w.xCoord(pivot);
    long n = 0;
    for (const Box& b : boxes)
        if (w.xCoord(b) > x) ++n;
    return n;
}

long countLeft(const std::vector<Box>& boxes, const Box& pivot, const Weighting& w) {
    const Rational x = w.xCoord(pivot);
    long n = 0;
    for (const Box& b : boxes)
        if (w.xCoord(b) < x) ++n;
    return n;
}

}  // namespace

std::vector<std::pair<Multipartition, long>> branchInduce(const Multipartition& xi, Residue r,
                                                          const Weighting& w) {
    std::vector<Box> add = addableBoxes(xi, r, w);
    std::vector<Box> rem = removableBoxes(xi, r, w);
    std::vector<std::pair<Multipartition, long>> out;
    for (const Box& b : add) {
        long m = countRight(add, b, w) - countRight(rem, b, w);
        out.emplace_back(xi.withBoxAdded(b), -m);
    }
    return out;
}

std::vector<std::pair<Multipartition, long>> branchRestrict(const Multipartition& xi, Residue r,
                                                            const Weighting& w) {
    std::vector<Box> add = addableBoxes(xi, r, w);
    std::vector<Box> rem = removableBoxes(xi, r, w);
    std::vector<std::pair<Multipartition, long>> out;
    for (const Box& b : rem) {
        long n = countLeft(add, b, w) - countLeft(rem, b, w);
        out.emplace_back(xi.withBoxRemoved(b), n);
    }
    return out;
}

namespace {

enum class StrandKind { Black, Ghost, Red };

struct DiagramStrand {
    EntryPos top;
    EntryPos bottom;
    StrandKind kind;
    long label;  // residue class
};

// Raw crossing degree with the printed label rules; callers negate.
long rawDiagramDegree(const std::vector<DiagramStrand>& strands, long modulus) {
    auto crosses = [](const DiagramStrand& a, const DiagramStrand& b) {
        if (a.top == b.top || a.bottom == b.bottom)
            throw DegenerateWeighting("tangent strands in diagram degree");
        bool topLess = a.top < b.top;
        bool bottomLess = a.bottom < b.bottom;
        return topLess != bottomLess;
    };
    long raw = 0;
    for (std::size_t i = 0; i < strands.size(); ++i)
        for (std::size_t j = i + 1; j < strands.size(); ++j) {
            const DiagramStrand& a = strands[i];
            const DiagramStrand& b = strands[j];
            // Only pairs carrying a degree rule need a crossing test.
            if (a.kind == StrandKind::Black && b.kind == StrandKind::Black) {
                if (a.label == b.label && crosses(a, b)) raw -= 2;
            } else if (a.kind == StrandKind::Black && b.kind == StrandKind::Ghost) {
                if (modEuclid(a.label + 1, modulus) == b.label && crosses(a, b)) raw += 1;
            } else if (a.kind == StrandKind::Ghost && b.kind == StrandKind::Black) {
                if (modEuclid(b.label + 1, modulus) == a.label && crosses(a, b)) raw += 1;
            } else if (a.kind == StrandKind::Black && b.kind == StrandKind::Red) {
                if (a.label == b.label && crosses(a, b)) raw += 1;
            } else if (a.kind == StrandKind::Red && b.kind == StrandKind::Black) {
                if (a.label == b.label && crosses(a, b)) raw += 1;
            }
        }
    return raw;
}

}  // namespace

long crossingDegree(const ITableau& S) {
    const Weighting& w = S.weighting;
    std::vector<DiagramStrand> strands;
    for (const Box& b : S.shape.boxes()) {
        EntryPos top = slotPosition(b, w);
        EntryPos bot = S.entry(b);
        long label = w.residue(b).value;
        strands.push_back({top, bot, StrandKind::Black, label});
        strands.push_back(
            {top.shifted(w.kappa()), bot.shifted(w.kappa()), StrandKind::Ghost, label});
    }
    for (long m = 0; m < w.level(); ++m) {
        EntryPos pos{w.theta(m), 0};
        strands.push_back({pos, pos, StrandKind::Red, modEuclid(w.charge(m), w.modulus())});
    }
    return -rawDiagramDegree(strands, w.modulus());
}

long interpolationDegree(const Multipartition& xi, const Weighting& wTop,
                         const Weighting& wBottom, const std::vector<long>* componentMap) {
    if (wTop.level() != wBottom.level() || wTop.modulus() != wBottom.modulus())
        throw InvalidInput("interpolation needs weightings of equal level and modulus");
    auto mapped = [&](long m) {
        return componentMap ? (*componentMap)[static_cast<std::size_t>(m)] : m;
    };
    std::vector<DiagramStrand> strands;
    for (const Box& b : xi.boxes()) {
        Box top{mapped(b.component), b.row, b.col};
        long label = wBottom.residue(b).value;
        EntryPos topPos = slotPosition(top, wTop);
        EntryPos botPos = slotPosition(b, wBottom);
        strands.push_back({topPos, botPos, StrandKind::Black, label});
        strands.push_back({topPos.shifted(wTop.kappa()), botPos.shifted(wBottom.kappa()),
                           StrandKind::Ghost, label});
    }
    for (long m = 0; m < wBottom.level(); ++m) {
        strands.push_back({EntryPos{wTop.theta(mapped(m)), 0}, EntryPos{wBottom.theta(m), 0},
                           StrandKind::Red, modEuclid(wBottom.charge(m), wBottom.modulus())});
    }
    return -rawDiagramDegree(strands, wBottom.modulus());
}

long braidInterpolationDegree(const Multipartition& xi, long g, const Weighting& w) {
    if (g < 1 || g >= w.level()) throw InvalidInput("braid step needs adjacent components");
    // The braid step is local to the crossing pair: other components are
    // spectators, so the degree bookkeeping restricts to components g, g+1.
    // The two anchors travel symmetrically just far enough that aligned
    // column pairs (and their ghost partners) reverse and nothing else does:
    // a relative sweep of e/l + 1/2 diagonal units.
    Multipartition pair({xi.component(g - 1), xi.component(g)});
    Rational sweep = w.kappa() * (makeRational(w.modulus()) / makeRational(w.level()) +
                                  makeRational(1, 2));
    Rational delta = sweep / makeRational(2);
    Weighting bottom(w.kappa(), {w.theta(g - 1), w.theta(g)}, {w.charge(g - 1), w.charge(g)},
                     w.modulus());
    Weighting top(w.kappa(), {w.theta(g - 1) - delta, w.theta(g) + delta},
                  {w.charge(g - 1), w.charge(g)}, w.modulus());
    return interpolationDegree(pair, top, bottom, nullptr);
}

}  // namespace wklr
