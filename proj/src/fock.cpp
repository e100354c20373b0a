#include "wklr/fock.hpp"

#include <algorithm>
#include <sstream>

#include "wklr/abacus.hpp"
#include "wklr/errors.hpp"

namespace wklr {

void FockVector::add(const Multipartition& xi, const LaurentPoly& c) {
    if (c.isZero()) return;
    auto it = terms_.find(xi);
    if (it == terms_.end()) {
        terms_.emplace(xi, c);
    } else {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

LaurentPoly FockVector::coeff(const Multipartition& xi) const {
    auto it = terms_.find(xi);
    return it == terms_.end() ? LaurentPoly::zero() : it->second;
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [xi, c] : o.terms_) add(xi, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [xi, c] : o.terms_) add(xi, -c);
    return *this;
}

FockVector FockVector::operator*(const LaurentPoly& c) const {
    FockVector out(weighting_);
    if (c.isZero()) return out;
    for (const auto& [xi, k] : terms_) out.add(xi, k * c);
    return out;
}

std::string FockVector::toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [xi, c] : terms_) {
        if (!first) out << " + ";
        out << "(" << c.toString() << ")*u" << xi.toString();
        first = false;
    }
    return out.str();
}

FockVector applyF(Residue r, const FockVector& v) {
    FockVector out(v.weighting());
    const Weighting& w = v.weighting();
    for (const auto& [xi, c] : v.terms()) {
        std::vector<Box> add = addableBoxes(xi, r, w);
        std::vector<Box> rem = removableBoxes(xi, r, w);
        for (const Box& b : add) {
            long m = 0;
            for (const Box& a : add)
                if (w.xCoord(a) > w.xCoord(b)) ++m;
            for (const Box& a : rem)
                if (w.xCoord(a) > w.xCoord(b)) --m;
            out.add(xi.withBoxAdded(b), c * LaurentPoly::monomial(-m));
        }
    }
    return out;
}

FockVector applyE(Residue r, const FockVector& v) {
    FockVector out(v.weighting());
    const Weighting& w = v.weighting();
    for (const auto& [xi, c] : v.terms()) {
        std::vector<Box> add = addableBoxes(xi, r, w);
        std::vector<Box> rem = removableBoxes(xi, r, w);
        for (const Box& b : rem) {
            long n = 0;
            for (const Box& a : add)
                if (w.xCoord(a) < w.xCoord(b)) ++n;
            for (const Box& a : rem)
                if (w.xCoord(a) < w.xCoord(b)) --n;
            out.add(xi.withBoxRemoved(b), c * LaurentPoly::monomial(n));
        }
    }
    return out;
}

FockVector dividedPower(Chevalley op, Residue r, long a, const FockVector& v) {
    if (a < 0) throw InvalidInput("divided power needs a nonnegative exponent");
    FockVector acc = v;
    for (long k = 0; k < a; ++k) acc = (op == Chevalley::F) ? applyF(r, acc) : applyE(r, acc);
    if (a <= 1) return acc;
    LaurentPoly fact = qFactorial(a);
    FockVector out(v.weighting());
    for (const auto& [xi, c] : acc.terms()) out.add(xi, divideExact(c, fact));
    return out;
}

namespace {

struct ParenWord {
    // Uncancelled removable boxes ("(") and addable boxes (")"), each sorted
    // by x-coordinate ascending.
    std::vector<Box> opens;
    std::vector<Box> closes;
};

ParenWord matchParens(Residue r, const Multipartition& xi, const Weighting& w) {
    std::vector<Box> add = addableBoxes(xi, r, w);
    std::vector<Box> rem = removableBoxes(xi, r, w);
    struct Mark {
        Rational x;
        bool open;  // removable = "(" ; addable = ")"
        Box box;
    };
    std::vector<Mark> marks;
    for (const Box& b : add) marks.push_back({w.xCoord(b), false, b});
    for (const Box& b : rem) marks.push_back({w.xCoord(b), true, b});
    std::sort(marks.begin(), marks.end(), [](const Mark& a, const Mark& b) { return a.x < b.x; });
    for (std::size_t i = 0; i + 1 < marks.size(); ++i)
        if (marks[i].x == marks[i + 1].x)
            throw DegenerateWeighting("parenthesis marks at the same position");

    ParenWord word;
    std::vector<Box> stack;
    for (const Mark& m : marks) {
        if (m.open) {
            stack.push_back(m.box);
        } else if (!stack.empty()) {
            stack.pop_back();  // matched "( )" pair cancels
        } else {
            word.closes.push_back(m.box);
        }
    }
    word.opens = stack;
    return word;
}

}  // namespace

std::optional<Multipartition> crystalF(Residue r, const Multipartition& xi, const Weighting& w) {
    ParenWord word = matchParens(r, xi, w);
    if (word.closes.empty()) return std::nullopt;
    return xi.withBoxAdded(word.closes.back());  // rightmost uncancelled ")"
}

std::optional<Multipartition> crystalE(Residue r, const Multipartition& xi, const Weighting& w) {
    ParenWord word = matchParens(r, xi, w);
    if (word.opens.empty()) return std::nullopt;
    return xi.withBoxRemoved(word.opens.front());  // leftmost uncancelled "("
}

std::pair<long, long> stringLengths(Residue r, const Multipartition& xi, const Weighting& w) {
    ParenWord word = matchParens(r, xi, w);
    return {static_cast<long>(word.opens.size()), static_cast<long>(word.closes.size())};
}

FockVector quantumWeylT(Residue r, const FockVector& v) {
    const Weighting& w = v.weighting();
    // Split into weight components.
    std::map<long, FockVector> byWeight;
    for (const auto& [xi, c] : v.terms()) {
        long mu = weightPairing(r, xi, w);
        auto it = byWeight.find(mu);
        if (it == byWeight.end()) it = byWeight.emplace(mu, FockVector(w)).first;
        it->second.add(xi, c);
    }
    FockVector out(w);
    for (const auto& [mu, comp] : byWeight) {
        for (long c = 0;; ++c) {
            FockVector ec = dividedPower(Chevalley::E, r, c, comp);
            if (ec.isZero()) break;
            for (long a = 0;; ++a) {
                long b = a + mu + c;
                if (b < 0) continue;
                FockVector fb = dividedPower(Chevalley::F, r, b, ec);
                FockVector ea = dividedPower(Chevalley::E, r, a, fb);
                if (ea.isZero()) {
                    // Larger a only raises the weight further; once F^(b)E^(c)
                    // dies for every bigger b the loop can stop.
                    if (fb.isZero()) break;
                    continue;
                }
                long sign = ((a + c) % 2 == 0) ? 1 : -1;
                LaurentPoly scalar = LaurentPoly::monomial(a * c - b, Integer(sign));
                out += ea * scalar;
            }
        }
    }
    return out;
}

namespace {

// Interleaved single abacus of the whole multipartition: component m
// (0-based) contributes its bead h at global position h*l + m.
struct GlobalAbacus {
    long level;
    std::vector<Abacus> rows;

    bool hasBead(long p) const {
        long m = modEuclid(p, level);
        return rows[static_cast<std::size_t>(m)].hasBead(floorDiv(p, level));
    }
};

GlobalAbacus globalAbacus(const Multipartition& xi, const std::vector<long>& charges) {
    GlobalAbacus g{xi.level(), {}};
    for (long m = 0; m < xi.level(); ++m)
        g.rows.push_back(toAbacus(xi.component(m), charges[static_cast<std::size_t>(m)]));
    return g;
}

std::pair<long, long> globalWindow(const GlobalAbacus& g) {
    long lo = 0, hi = 0;
    bool first = true;
    for (long m = 0; m < g.level; ++m) {
        const Abacus& a = g.rows[static_cast<std::size_t>(m)];
        long alo = a.charge(), ahi = a.charge();
        if (!a.missingBeads().empty()) alo = std::min(alo, *a.missingBeads().begin());
        if (!a.extraBeads().empty()) ahi = std::max(ahi, *a.extraBeads().rbegin() + 1);
        long plo = alo * g.level + m, phi = ahi * g.level + m;
        if (first) {
            lo = plo;
            hi = phi;
            first = false;
        } else {
            lo = std::min(lo, plo);
            hi = std::max(hi, phi);
        }
    }
    return {lo - g.level, hi + g.level};
}

// One bead move between adjacent interleaved runners: global position
// p = h*l + (m-1) carries component m's bead at height h; the raising
// direction moves a bead p -> p+1, the lowering one back.  Exponents are
// counted in the flipped (level-rank dual) geometry: a site at component m,
// height h sits on the flipped component c = h mod e at flipped position
// pf = floor(h/e)*l + (m-1), with x-order (pf, then c descending).
struct DualSite {
    long p = 0;        // global interleaved position of the bead-gap pair
    long pf = 0;       // flipped-side bead position
    long c = 0;        // flipped-side component
    bool raising = false;
};

bool dualSiteRight(const DualSite& a, const DualSite& b) {
    // true when a sits strictly right of b in the flipped x-order
    if (a.pf != b.pf) return a.pf > b.pf;
    return a.c < b.c;
}

FockVector dualApply(long g, const FockVector& v, bool raising) {
    const Weighting& w = v.weighting();
    if (!w.isUglov()) throw InvalidInput("dual operators act on Uglov weightings");
    const long l = w.level();
    const long e = w.modulus();
    if (g < 0 || g >= l) throw InvalidInput("dual operator index out of range");

    std::optional<Weighting> newW;
    FockVector out;
    for (const auto& [xi, coef] : v.terms()) {
        GlobalAbacus ga = globalAbacus(xi, w.charges());
        auto [lo, hi] = globalWindow(ga);
        std::vector<DualSite> sites;
        for (long p = lo; p < hi; ++p) {
            if (modEuclid(p, l) != modEuclid(g - 1, l)) continue;
            bool up = ga.hasBead(p) && !ga.hasBead(p + 1);
            bool down = ga.hasBead(p + 1) && !ga.hasBead(p);
            if (!up && !down) continue;
            long h = floorDiv(p, l);
            DualSite s;
            s.p = p;
            s.pf = floorDiv(h, e) * l + modEuclid(p, l);
            s.c = modEuclid(h, e);
            s.raising = up;
            sites.push_back(s);
        }
        for (const DualSite& site : sites) {
            if (site.raising != raising) continue;
            long stat = 0;
            for (const DualSite& other : sites) {
                if (other.p == site.p) continue;
                if (raising) {
                    // F-convention: q^(-m), m = #raising sites right - #lowering right.
                    if (dualSiteRight(other, site)) stat += other.raising ? 1 : -1;
                } else {
                    // E-convention: q^(+n), n = #raising sites left - #lowering left.
                    if (dualSiteRight(site, other)) stat += other.raising ? 1 : -1;
                }
            }
            // Wedge sign: parity of the occupied slots strictly between the
            // two endpoints in the interleaved (position, flipped-component)
            // order.
            long crossings = 0;
            for (long c2 = 0; c2 < e; ++c2) {
                for (long pf : {site.pf, site.pf + 1}) {
                    if (pf == site.pf && c2 <= site.c) continue;
                    if (pf == site.pf + 1 && c2 >= site.c) continue;
                    long comp = modEuclid(pf, l);
                    long height = floorDiv(pf, l) * e + c2;
                    if (ga.rows[static_cast<std::size_t>(comp)].hasBead(height)) ++crossings;
                }
            }
            long sign = crossings % 2 == 0 ? 1 : -1;
            long from = raising ? site.p : site.p + 1;
            long to = raising ? site.p + 1 : site.p;
            long mFrom = modEuclid(from, l), mTo = modEuclid(to, l);
            std::vector<long> charges = w.charges();
            std::vector<Partition> comps = xi.components();

            auto adjust = [&](long comp, long height, bool addBead) {
                Abacus a = toAbacus(comps[static_cast<std::size_t>(comp)],
                                    charges[static_cast<std::size_t>(comp)]);
                std::set<long> beads;
                long wlo = std::min({height, a.charge(),
                                     a.missingBeads().empty() ? height : *a.missingBeads().begin()}) -
                           2;
                long whi = std::max({height + 1, a.charge(),
                                     a.extraBeads().empty() ? height : *a.extraBeads().rbegin() + 1}) +
                           2;
                for (long h = wlo; h < whi; ++h)
                    if (a.hasBead(h)) beads.insert(h);
                if (addBead)
                    beads.insert(height);
                else
                    beads.erase(height);
                long charge = charges[static_cast<std::size_t>(comp)] + (addBead ? 1 : -1);
                std::set<long> extra, missing;
                for (long h = std::min(wlo, charge); h < std::max(whi, charge); ++h) {
                    bool bead = h < wlo ? true : (h >= whi ? false : beads.count(h) > 0);
                    if (h >= charge && bead) extra.insert(h);
                    if (h < charge && !bead) missing.insert(h);
                }
                charges[static_cast<std::size_t>(comp)] = charge;
                comps[static_cast<std::size_t>(comp)] =
                    fromAbacus(Abacus(charge, std::move(extra), std::move(missing))).first;
            };
            adjust(mFrom, floorDiv(from, l), false);
            adjust(mTo, floorDiv(to, l), true);

            Weighting wNew = uglovWeighting(charges, e, w.kappa() > 0 ? 1 : -1);
            if (!newW) {
                newW = wNew;
                out = FockVector(*newW);
            } else if (!(newW->charges() == wNew.charges())) {
                throw InvalidInput("dual operator produced mixed charges");
            }
            long expo = raising ? -stat : stat;
            out.add(Multipartition(std::move(comps)),
                    coef * LaurentPoly::monomial(expo, Integer(sign)));
        }
    }
    if (!newW) return FockVector(v.weighting());
    return out;
}

}  // namespace

FockVector dualApplyF(long g, const FockVector& v) { return dualApply(g, v, true); }
FockVector dualApplyE(long g, const FockVector& v) { return dualApply(g, v, false); }

long dualWeightPairing(long g, const Multipartition& xi, const Weighting& w) {
    GlobalAbacus ga = globalAbacus(xi, w.charges());
    auto [lo, hi] = globalWindow(ga);
    long up = 0, down = 0;
    for (long p = lo; p < hi; ++p) {
        if (modEuclid(p, w.level()) != modEuclid(g - 1, w.level())) continue;
        if (ga.hasBead(p) && !ga.hasBead(p + 1)) ++up;
        if (!ga.hasBead(p) && ga.hasBead(p + 1)) ++down;
    }
    return up - down;
}

FockVector dualQuantumWeylT(long g, const FockVector& v) {
    const Weighting& w = v.weighting();
    auto dualDivided = [&](bool raising, long a, const FockVector& u) {
        FockVector acc = u;
        for (long k = 0; k < a; ++k) acc = dualApply(g, acc, raising);
        if (a <= 1) return acc;
        LaurentPoly fact = qFactorial(a);
        FockVector out(acc.weighting());
        for (const auto& [xi, c] : acc.terms()) out.add(xi, divideExact(c, fact));
        return out;
    };
    std::map<long, FockVector> byWeight;
    for (const auto& [xi, c] : v.terms()) {
        long mu = dualWeightPairing(g, xi, w);
        auto it = byWeight.find(mu);
        if (it == byWeight.end()) it = byWeight.emplace(mu, FockVector(w)).first;
        it->second.add(xi, c);
    }
    FockVector out;
    bool first = true;
    for (const auto& [mu, comp] : byWeight) {
        for (long c = 0;; ++c) {
            FockVector ec = dualDivided(false, c, comp);
            if (ec.isZero()) break;
            for (long a = 0;; ++a) {
                long b = a + mu + c;
                if (b < 0) continue;
                FockVector fb = dualDivided(true, b, ec);
                FockVector ea = dualDivided(false, a, fb);
                if (ea.isZero()) {
                    if (fb.isZero()) break;
                    continue;
                }
                long sign = ((a + c) % 2 == 0) ? 1 : -1;
                FockVector scaled = ea * LaurentPoly::monomial(a * c - b, Integer(sign));
                if (first) {
                    out = scaled;
                    first = false;
                } else {
                    out += scaled;
                }
            }
        }
    }
    if (first) return FockVector(v.weighting());
    return out;
}

std::size_t BlockBasisData::indexOf(const Multipartition& xi) const {
    for (std::size_t i = 0; i < block.size(); ++i)
        if (block[i] == xi) return i;
    throw InvalidInput("multipartition outside the block");
}

BlockBasisData blockBasis(const Weighting& w, const std::map<long, long>& content) {
    BlockBasisData data;
    data.block = enumerateBlock(w, content);
    data.weighting = w;
    data.canonical = decompositionMatrix(data.block, w);
    return data;
}

namespace {

LaurentPoly barq(const LaurentPoly& f) { return bar(f); }

// Coordinates of v in the canonical basis (unit triangular solve from the
// bottom of the block).
std::vector<LaurentPoly> canonicalCoordinates(const BlockBasisData& data, const FockVector& v) {
    const std::size_t n = data.block.size();
    std::vector<LaurentPoly> coords(n);
    std::vector<LaurentPoly> residual(n);
    for (std::size_t i = 0; i < n; ++i) residual[i] = v.coeff(data.block[i]);
    for (std::size_t j = n; j-- > 0;) {
        coords[j] = residual[j];  // diagonal of the canonical matrix is 1
        if (coords[j].isZero()) continue;
        for (std::size_t r = 0; r < n; ++r)
            residual[r] -= coords[j] * data.canonical.entries[r][j];
    }
    for (std::size_t r = 0; r < n; ++r)
        if (!residual[r].isZero()) throw InvalidInput("vector not supported on the block");
    return coords;
}

}  // namespace

FockVector barOnBlock(const BlockBasisData& data, const FockVector& v) {
    std::vector<LaurentPoly> coords = canonicalCoordinates(data, v);
    FockVector out(data.weighting);
    for (std::size_t j = 0; j < data.block.size(); ++j) {
        if (coords[j].isZero()) continue;
        LaurentPoly cj = barq(coords[j]);
        for (std::size_t r = 0; r < data.block.size(); ++r)
            out.add(data.block[r], cj * data.canonical.entries[r][j]);
    }
    return out;
}

LaurentPoly sesquiForm(const BlockBasisData& data, const FockVector& u, const FockVector& v) {
    FockVector ub = barOnBlock(data, u);
    LaurentPoly s;
    for (const auto& [xi, c] : ub.terms()) s += c * v.coeff(xi);
    return s;
}

GradedMatrix mutateBasis(const BlockBasisData& data, const std::vector<std::size_t>& newOrder) {
    const std::size_t n = data.block.size();
    if (newOrder.size() != n) throw InvalidInput("order must be a permutation of the block");

    // rank[i] = position of block index i in the new total order.
    std::vector<std::size_t> rank(n);
    for (std::size_t pos = 0; pos < n; ++pos) rank[newOrder[pos]] = pos;

    // v'_i = v_i - sum over j with rank[j] > rank[i] of c_j v'_j, chosen so
    // that <v'_i, v'_j> = 0 for all such j (the form is antilinear in its
    // first argument).  Process indices by descending rank.
    std::vector<FockVector> mutated(n, FockVector(data.weighting));
    std::vector<std::size_t> order = newOrder;  // ascending rank
    for (std::size_t pos = n; pos-- > 0;) {
        std::size_t i = order[pos];
        FockVector vi = FockVector::basis(data.block[i], data.weighting);
        for (std::size_t pos2 = pos + 1; pos2 < n; ++pos2) {
            std::size_t j = order[pos2];
            LaurentPoly num = sesquiForm(data, vi, mutated[j]);
            if (num.isZero()) continue;
            LaurentPoly den = sesquiForm(data, mutated[j], mutated[j]);
            LaurentPoly cj;
            try {
                cj = bar(divideExact(num, den));
            } catch (const DivisionFailure& err) {
                throw MutationFailure(err.what());
            }
            vi -= mutated[j] * cj;
        }
        mutated[i] = vi;
    }

    GradedMatrix out;
    out.rows = data.block;
    out.cols = data.block;
    out.entries.assign(n, std::vector<LaurentPoly>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < n; ++r) out.entries[r][j] = mutated[j].coeff(data.block[r]);
    return out;
}

}  // namespace wklr
