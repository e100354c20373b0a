#include "wklr/order.hpp"

#include <algorithm>

#include "wklr/errors.hpp"

namespace wklr {

namespace {

std::vector<Box> sortByX(std::vector<Box> boxes, const Weighting& w, const char* kind) {
    std::sort(boxes.begin(), boxes.end(), [&](const Box& a, const Box& b) {
        return w.xCoord(a) < w.xCoord(b);
    });
    for (std::size_t i = 0; i + 1 < boxes.size(); ++i)
        if (w.xCoord(boxes[i]) == w.xCoord(boxes[i + 1]))
            throw DegenerateWeighting(std::string(kind) + " boxes share an x-coordinate");
    return boxes;
}

}  // namespace

std::vector<Box> addableBoxes(const Multipartition& xi, Residue r, const Weighting& w) {
    std::vector<Box> out;
    for (const Box& b : xi.addable())
        if (w.residue(b) == r) out.push_back(b);
    return sortByX(std::move(out), w, "addable");
}

std::vector<Box> removableBoxes(const Multipartition& xi, Residue r, const Weighting& w) {
    std::vector<Box> out;
    for (const Box& b : xi.removable())
        if (w.residue(b) == r) out.push_back(b);
    return sortByX(std::move(out), w, "removable");
}

long weightPairing(Residue r, const Multipartition& xi, const Weighting& w) {
    long add = 0, rem = 0;
    for (const Box& b : xi.addable())
        if (w.residue(b) == r) ++add;
    for (const Box& b : xi.removable())
        if (w.residue(b) == r) ++rem;
    return add - rem;
}

std::map<long, long> residueContent(const Multipartition& xi, const Weighting& w) {
    std::map<long, long> content;
    for (const Box& b : xi.boxes()) content[w.residue(b).value] += 1;
    return content;
}

Comparison dominanceCompare(const Multipartition& xi, const Multipartition& eta,
                            const Weighting& w) {
    if (xi == eta) return Comparison::Equal;
    if (residueContent(xi, w) != residueContent(eta, w)) return Comparison::Incomparable;

    std::map<long, std::vector<Rational>> xs, ys;
    for (const Box& b : xi.boxes()) xs[w.residue(b).value].push_back(w.xCoord(b));
    for (const Box& b : eta.boxes()) ys[w.residue(b).value].push_back(w.xCoord(b));

    bool geq = true, leq = true;
    for (auto& [r, xlist] : xs) {
        auto& ylist = ys[r];
        std::sort(xlist.begin(), xlist.end());
        std::sort(ylist.begin(), ylist.end());
        for (std::size_t i = 0; i < xlist.size(); ++i) {
            if (xlist[i] > ylist[i]) geq = false;
            if (xlist[i] < ylist[i]) leq = false;
        }
    }
    // Distinct shapes with identical counting functions would break
    // antisymmetry; report them as incomparable.
    if (geq && leq) return Comparison::Incomparable;
    if (geq) return Comparison::Greater;
    if (leq) return Comparison::Less;
    return Comparison::Incomparable;
}

Rational cFunction(const Multipartition& xi, const Weighting& w) {
    Rational c = 0;
    for (const Box& b : xi.boxes()) c -= w.xCoord(b);
    return c;
}

namespace {

std::vector<Multipartition> sortBlock(std::vector<Multipartition> shapes, const Weighting& w) {
    std::sort(shapes.begin(), shapes.end(), [&](const Multipartition& a, const Multipartition& b) {
        Rational ca = cFunction(a, w), cb = cFunction(b, w);
        if (ca != cb) return ca > cb;
        return a < b;
    });
    return shapes;
}

}  // namespace

std::vector<Multipartition> enumerateBlock(const Weighting& w,
                                           const std::map<long, long>& content) {
    long n = 0;
    for (const auto& [r, k] : content) {
        if (k < 0) throw InvalidInput("negative residue multiplicity");
        n += k;
    }
    std::vector<Multipartition> out;
    for (const auto& xi : multipartitionsOf(n, w.level()))
        if (residueContent(xi, w) == content) out.push_back(xi);
    return sortBlock(std::move(out), w);
}

std::vector<Multipartition> enumerateBySize(long n, long level, const Weighting& w) {
    return sortBlock(multipartitionsOf(n, level), w);
}

bool betweenCheck(const Weighting& wLo, const Weighting& wMid, const Weighting& wHi, long n) {
    // Columns occurring in multipartitions of size <= n: component m with
    // diagonal offset d = col - row, |d| <= n-1.
    struct Column {
        long component;
        long diag;
    };
    std::vector<Column> cols;
    for (long m = 0; m < wLo.level(); ++m)
        for (long d = -(n - 1); d <= n - 1; ++d) cols.push_back(Column{m, d});

    auto pos = [](const Weighting& w, const Column& c) -> Rational {
        return w.theta(c.component) + w.kappa() * makeRational(c.diag);
    };
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (i == j) continue;
            // a > b in both end orders but b > a in the middle order.
            if (pos(wLo, cols[i]) > pos(wLo, cols[j]) && pos(wHi, cols[i]) > pos(wHi, cols[j]) &&
                pos(wMid, cols[j]) > pos(wMid, cols[i]))
                return false;
        }
    return true;
}

}  // namespace wklr
