#include "wklr/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "wklr/errors.hpp"

namespace wklr {

std::string EntryPos::toString() const {
    std::string s = rationalToString(real);
    if (eps != 0) s += "@" + std::to_string(eps);
    return s;
}

Loading::Loading(std::vector<std::pair<EntryPos, Residue>> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < points_.size(); ++i)
        if (points_[i].first == points_[i + 1].first)
            throw DegenerateWeighting("loading points collide");
}

std::map<long, long> Loading::residueContent() const {
    std::map<long, long> content;
    for (const auto& [pos, r] : points_) content[r.value] += 1;
    return content;
}

std::string Loading::toString() const {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i) out << ", ";
        out << points_[i].first.toString() << ":" << points_[i].second.value;
    }
    out << "}";
    return out.str();
}

std::string ITableau::toString() const {
    std::ostringstream out;
    out << shape.toString() << " {";
    bool first = true;
    for (const auto& [b, pos] : fill) {
        if (!first) out << ", ";
        out << (b.row + 1) << "," << (b.col + 1) << "," << (b.component + 1) << "<-"
            << pos.toString();
        first = false;
    }
    out << "}";
    return out.str();
}

EntryPos slotPosition(const Box& b, const Weighting& w) {
    return EntryPos{w.xCoord(b), b.row + b.col + 2};
}

Loading canonicalLoading(const Multipartition& xi, const Weighting& w) {
    std::vector<std::pair<EntryPos, Residue>> points;
    for (const Box& b : xi.boxes()) points.emplace_back(slotPosition(b, w), w.residue(b));
    return Loading(std::move(points));
}

ITableau tautologicalTableau(const Multipartition& xi, const Weighting& w) {
    ITableau t{xi, w, {}};
    for (const Box& b : xi.boxes()) t.fill[b] = slotPosition(b, w);
    return t;
}

namespace {

// Lower bound (strict) for the entry of box b given its predecessors.
bool admissible(const ITableau& t, const Box& b, const EntryPos& candidate) {
    const Weighting& w = t.weighting;
    if (b.row == 0 && b.col == 0) {
        if (!(candidate > EntryPos{w.theta(b.component), 0})) return false;
    }
    if (b.row > 0) {
        const EntryPos& above = t.entry(Box{b.component, b.row - 1, b.col});
        if (!(candidate > above.shifted(-w.kappa()))) return false;
    }
    if (b.col > 0) {
        const EntryPos& left = t.entry(Box{b.component, b.row, b.col - 1});
        if (!(candidate > left.shifted(w.kappa()))) return false;
    }
    return true;
}

void enumerateFills(const Multipartition& xi, const Weighting& w,
                    const std::vector<EntryPos>& entries, const std::vector<Residue>* labels,
                    std::vector<ITableau>& out) {
    std::vector<Box> boxes = xi.boxes();  // row-major per component
    if (boxes.size() != entries.size()) {
        if (labels == nullptr)
            throw InvalidInput("entry set size must equal the number of boxes");
        return;  // wrong residue content simply yields no tableaux
    }
    std::vector<bool> used(entries.size(), false);
    ITableau current{xi, w, {}};
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == boxes.size()) {
            out.push_back(current);
            return;
        }
        const Box& b = boxes[k];
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (used[i]) continue;
            if (labels && (*labels)[i] != w.residue(b)) continue;
            if (!admissible(current, b, entries[i])) continue;
            used[i] = true;
            current.fill[b] = entries[i];
            self(self, k + 1);
            current.fill.erase(b);
            used[i] = false;
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<ITableau> enumerateDTableaux(const Multipartition& xi,
                                         const std::vector<EntryPos>& entries,
                                         const Weighting& w) {
    std::vector<EntryPos> sorted = entries;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1]) throw InvalidInput("entry positions must be distinct");
    std::vector<ITableau> out;
    enumerateFills(xi, w, sorted, nullptr, out);
    return out;
}

std::vector<ITableau> enumerateITableaux(const Multipartition& xi, const Loading& loading,
                                         const Weighting& w) {
    std::vector<EntryPos> entries;
    std::vector<Residue> labels;
    for (const auto& [pos, r] : loading.points()) {
        entries.push_back(pos);
        labels.push_back(r);
    }
    std::vector<ITableau> out;
    if (entries.size() != static_cast<std::size_t>(xi.size())) return out;
    enumerateFills(xi, w, entries, &labels, out);
    return out;
}

std::vector<Box> statusSlots(const Multipartition& xi) {
    std::vector<Box> slots = xi.boxes();
    for (const Box& b : xi.addable()) slots.push_back(b);
    return slots;
}

RelStatus relativeStatus(const ITableau& S, const Box& slot, const EntryPos& h) {
    const Weighting& w = S.weighting;
    const bool inShape = S.shape.contains(slot);

    auto entryOrMissing = [&](long r, long c) -> const EntryPos* {
        Box b{slot.component, r, c};
        auto it = S.fill.find(b);
        return it == S.fill.end() ? nullptr : &it->second;
    };

    // Addable: slot unfilled at threshold h, predecessors filled.
    {
        bool ok = true;
        if (inShape && !(S.entry(slot) > h)) ok = false;
        if (ok && slot.row > 0) {
            const EntryPos* above = entryOrMissing(slot.row - 1, slot.col);
            if (above == nullptr || !(*above < h.shifted(w.kappa()))) ok = false;
        }
        if (ok && slot.col > 0) {
            const EntryPos* left = entryOrMissing(slot.row, slot.col - 1);
            if (left == nullptr || !(*left < h.shifted(-w.kappa()))) ok = false;
        }
        if (ok && slot.row == 0 && slot.col == 0) {
            if (!(EntryPos{w.theta(slot.component), 0} < h)) ok = false;
        }
        if (ok) return RelStatus::Addable;
    }

    // Removable: slot filled before h, successors not.
    if (inShape && S.entry(slot) < h) {
        const EntryPos* right = entryOrMissing(slot.row, slot.col + 1);
        const EntryPos* below = entryOrMissing(slot.row + 1, slot.col);
        bool ok = true;
        if (right != nullptr && !(*right > h.shifted(w.kappa()))) ok = false;
        if (below != nullptr && !(*below > h.shifted(-w.kappa()))) ok = false;
        if (ok) return RelStatus::Removable;
    }
    return RelStatus::Neither;
}

long tableauDegree(const ITableau& S) {
    const Weighting& w = S.weighting;
    const std::vector<Box> slots = statusSlots(S.shape);
    long degree = 0;
    for (const Box& b : S.shape.boxes()) {
        const EntryPos h = S.entry(b);
        const EntryPos posB = slotPosition(b, w);
        const Residue rb = w.residue(b);
        for (const Box& c : slots) {
            if (w.residue(c) != rb) continue;
            if (!(slotPosition(c, w) > posB)) continue;
            switch (relativeStatus(S, c, h)) {
                case RelStatus::Removable: ++degree; break;
                case RelStatus::Addable: --degree; break;
                case RelStatus::Neither: break;
            }
        }
    }
    return degree;
}

std::vector<Residue> russianReadingWord(const ITableau& S) {
    std::vector<std::pair<EntryPos, Residue>> byPos;
    for (const Box& b : S.shape.boxes())
        byPos.emplace_back(slotPosition(b, S.weighting), S.weighting.residue(b));
    std::sort(byPos.begin(), byPos.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Residue> word;
    for (const auto& [pos, r] : byPos) word.push_back(r);
    return word;
}

std::vector<EntryPos> farApartEntries(const Rational& s, long m) {
    std::vector<EntryPos> out;
    for (long k = 1; k <= m; ++k) out.push_back(EntryPos{s * makeRational(k), 0});
    return out;
}

}  // namespace wklr
