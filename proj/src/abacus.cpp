#include "wklr/abacus.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "wklr/errors.hpp"
#include "wklr/rational.hpp"

namespace wklr {

Abacus::Abacus(long charge, std::set<long> extraBeads, std::set<long> missingBeads)
    : charge_(charge), extra_(std::move(extraBeads)), missing_(std::move(missingBeads)) {
    for (long p : extra_)
        if (p < charge_) throw InvalidInput("extra bead below the charge line");
    for (long p : missing_)
        if (p >= charge_) throw InvalidInput("missing bead at or above the charge line");
    if (extra_.size() != missing_.size())
        throw InvalidInput("abacus bead count does not match its charge");
}

bool Abacus::hasBead(long position) const {
    if (position >= charge_) return extra_.count(position) > 0;
    return missing_.count(position) == 0;
}

std::vector<long> Abacus::beadsAtLeast(long lo) const {
    std::vector<long> out;
    long top = charge_ - 1;
    if (!extra_.empty()) top = std::max(top, *extra_.rbegin());
    for (long p = top; p >= lo; --p)
        if (hasBead(p)) out.push_back(p);
    return out;  // descending
}

long Abacus::weight() const {
    return fromAbacus(*this).first.size();
}

std::string Abacus::toString() const {
    std::ostringstream out;
    out << "charge " << charge_ << " +{";
    bool first = true;
    for (long p : extra_) {
        if (!first) out << ",";
        out << p;
        first = false;
    }
    out << "} -{";
    first = true;
    for (long p : missing_) {
        if (!first) out << ",";
        out << p;
        first = false;
    }
    out << "}";
    return out.str();
}

Abacus toAbacus(const Partition& lambda, long charge) {
    const long r = lambda.rows();
    std::set<long> beta;
    for (long i = 1; i <= r; ++i) beta.insert(lambda.part(i - 1) - i + charge);
    std::set<long> extra, missing;
    for (long b : beta)
        if (b >= charge) extra.insert(b);
    for (long p = charge - r; p < charge; ++p)
        if (!beta.count(p)) missing.insert(p);
    return Abacus(charge, std::move(extra), std::move(missing));
}

std::pair<Partition, long> fromAbacus(const Abacus& a) {
    long lo = a.charge();
    if (!a.missingBeads().empty()) lo = std::min(lo, *a.missingBeads().begin());
    std::vector<long> beads = a.beadsAtLeast(lo);  // descending; all below lo are beads
    std::vector<long> parts;
    long i = 1;
    for (long b : beads) {
        long part = b + i - a.charge();
        if (part > 0) parts.push_back(part);
        ++i;
    }
    // Rows below the window have part b + i - charge with b = lo - k: these
    // are all zero once the pattern is generic, which it is below lo.
    return {Partition(std::move(parts)), a.charge()};
}

namespace {

// Window [lo, hi) outside which the abacus pattern is generic.
std::pair<long, long> window(const Abacus& a) {
    long lo = a.charge(), hi = a.charge();
    if (!a.missingBeads().empty()) lo = std::min(lo, *a.missingBeads().begin());
    if (!a.extraBeads().empty()) hi = std::max(hi, *a.extraBeads().rbegin() + 1);
    return {lo, hi};
}

Abacus abacusFromBeadFn(long hLo, long hHi, const std::function<bool(long)>& bead) {
    // bead(h) must be true for h < hLo and false for h >= hHi.
    long charge = 0;
    for (long h = std::min(hLo, 0L); h < std::max(hHi, 0L); ++h) {
        bool b = h < hLo ? true : (h >= hHi ? false : bead(h));
        if (h >= 0 && b) ++charge;
        if (h < 0 && !b) --charge;
    }
    std::set<long> extra, missing;
    for (long h = std::min(hLo, charge); h < std::max(hHi, charge); ++h) {
        bool b = h < hLo ? true : (h >= hHi ? false : bead(h));
        if (h >= charge && b) extra.insert(h);
        if (h < charge && !b) missing.insert(h);
    }
    return Abacus(charge, std::move(extra), std::move(missing));
}

}  // namespace

std::vector<Abacus> runnerSplit(const Abacus& a, long e) {
    if (e < 1) throw InvalidInput("runner count must be positive");
    auto [lo, hi] = window(a);
    std::vector<Abacus> runners;
    runners.reserve(static_cast<std::size_t>(e));
    for (long j = 0; j < e; ++j) {
        long hLo = floorDiv(lo - j, e);
        long hHi = floorDiv(hi - j + e - 1, e) + 1;
        runners.push_back(
            abacusFromBeadFn(hLo, hHi, [&](long h) { return a.hasBead(h * e + j); }));
    }
    return runners;
}

Abacus runnerJoin(const std::vector<Abacus>& runners) {
    const long e = static_cast<long>(runners.size());
    if (e < 1) throw InvalidInput("runner join needs at least one runner");
    long hLo = 0, hHi = 0;
    bool first = true;
    for (const Abacus& r : runners) {
        auto [lo, hi] = window(r);
        if (first) {
            hLo = lo;
            hHi = hi;
            first = false;
        } else {
            hLo = std::min(hLo, lo);
            hHi = std::max(hHi, hi);
        }
    }
    long pLo = hLo * e - e, pHi = hHi * e + e;
    return abacusFromBeadFn(pLo, pHi, [&](long p) {
        long j = modEuclid(p, e);
        return runners[static_cast<std::size_t>(j)].hasBead(floorDiv(p, e));
    });
}

Partition eCore(const Partition& lambda, long charge, long e) {
    std::vector<Abacus> runners = runnerSplit(toAbacus(lambda, charge), e);
    std::vector<Abacus> collapsed;
    collapsed.reserve(runners.size());
    for (const Abacus& r : runners) collapsed.emplace_back(r.charge(), std::set<long>{}, std::set<long>{});
    return fromAbacus(runnerJoin(collapsed)).first;
}

RunnerMatrix matrixU(const Multipartition& xi, const std::vector<long>& charges, long e) {
    if (static_cast<long>(charges.size()) != xi.level())
        throw InvalidInput("charge tuple length must equal the level");
    RunnerMatrix M;
    M.level = xi.level();
    M.modulus = e;
    long coreBoxes = 0;
    for (long i = 0; i < M.level; ++i) {
        Abacus a = toAbacus(xi.component(i), charges[static_cast<std::size_t>(i)]);
        M.grid.push_back(runnerSplit(a, e));
        std::vector<long> row;
        long s = 0;
        for (const Abacus& r : M.grid.back()) {
            row.push_back(r.charge());
            s += r.charge();
        }
        M.u.push_back(std::move(row));
        M.rowSums.push_back(s);
        coreBoxes +=
            eCore(xi.component(i), charges[static_cast<std::size_t>(i)], e).size();
    }
    M.colSums.assign(static_cast<std::size_t>(e), 0);
    for (long i = 0; i < M.level; ++i)
        for (long j = 0; j < e; ++j)
            M.colSums[static_cast<std::size_t>(j)] += M.u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    M.defect = (xi.size() - coreBoxes) / e;
    return M;
}

std::pair<Multipartition, std::vector<long>> koszulFlip(const Multipartition& xi,
                                                        const std::vector<long>& charges,
                                                        long e) {
    RunnerMatrix M = matrixU(xi, charges, e);
    std::vector<Partition> dualComponents;
    std::vector<long> dualCharges;
    for (long j = 0; j < e; ++j) {
        std::vector<Abacus> column;
        column.reserve(static_cast<std::size_t>(M.level));
        for (long i = 0; i < M.level; ++i)
            column.push_back(M.grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        auto [mu, t] = fromAbacus(runnerJoin(column));
        dualComponents.push_back(std::move(mu));
        dualCharges.push_back(t);
    }
    return {Multipartition(std::move(dualComponents)), std::move(dualCharges)};
}

long pushCount(const Multipartition& xi, const std::vector<long>& charges, long e, long g) {
    if (g < 1 || g >= xi.level()) throw InvalidInput("push count needs adjacent components");
    RunnerMatrix M = matrixU(xi, charges, e);
    long count = 0;
    for (long j = 0; j < e; ++j) {
        const Abacus& top = M.grid[static_cast<std::size_t>(g - 1)][static_cast<std::size_t>(j)];
        const Abacus& bot = M.grid[static_cast<std::size_t>(g)][static_cast<std::size_t>(j)];
        auto [lo1, hi1] = window(top);
        auto [lo2, hi2] = window(bot);
        long lo = std::min(lo1, lo2) - 1, hi = std::max(hi1, hi2) + 1;
        for (long h = lo; h < hi; ++h)
            if (top.hasBead(h) && !bot.hasBead(h)) ++count;
    }
    return count;
}

}  // namespace wklr
