#include "wklr/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wklr/errors.hpp"

namespace wklr {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidInput("partition parts must be weakly decreasing");
    }
}

long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

long Partition::part(long row) const {
    if (row < 0 || row >= rows()) return 0;
    return parts_[static_cast<std::size_t>(row)];
}

long Partition::colLength(long col) const {
    long n = 0;
    for (long p : parts_)
        if (p > col) ++n;
    return n;
}

Partition Partition::conjugate() const {
    std::vector<long> cols;
    if (!parts_.empty()) {
        cols.resize(static_cast<std::size_t>(parts_[0]));
        for (long c = 0; c < parts_[0]; ++c) cols[static_cast<std::size_t>(c)] = colLength(c);
    }
    return Partition(std::move(cols));
}

std::vector<long> Partition::addableRows() const {
    std::vector<long> out;
    for (long r = 0; r <= rows(); ++r)
        if (r == 0 || part(r) < part(r - 1)) out.push_back(r);
    return out;
}

std::vector<long> Partition::removableRows() const {
    std::vector<long> out;
    for (long r = 0; r < rows(); ++r)
        if (part(r) > part(r + 1)) out.push_back(r);
    return out;
}

Partition Partition::withRowIncremented(long row) const {
    std::vector<long> p = parts_;
    if (row == rows())
        p.push_back(1);
    else
        p[static_cast<std::size_t>(row)] += 1;
    return Partition(std::move(p));
}

Partition Partition::withRowDecremented(long row) const {
    std::vector<long> p = parts_;
    p[static_cast<std::size_t>(row)] -= 1;
    if (p[static_cast<std::size_t>(row)] == 0) p.erase(p.begin() + row);
    return Partition(std::move(p));
}

std::string Partition::toString() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    out << ")";
    return out.str();
}

long Multipartition::size() const {
    long n = 0;
    for (const auto& p : components_) n += p.size();
    return n;
}

bool Multipartition::contains(const Box& b) const {
    if (b.component < 0 || b.component >= level() || b.row < 0 || b.col < 0) return false;
    return component(b.component).part(b.row) > b.col;
}

std::vector<Box> Multipartition::boxes() const {
    std::vector<Box> out;
    for (long m = 0; m < level(); ++m) {
        const Partition& p = component(m);
        for (long r = 0; r < p.rows(); ++r)
            for (long c = 0; c < p.part(r); ++c) out.push_back(Box{m, r, c});
    }
    return out;
}

std::vector<Box> Multipartition::addable() const {
    std::vector<Box> out;
    for (long m = 0; m < level(); ++m)
        for (long r : component(m).addableRows()) out.push_back(Box{m, r, component(m).part(r)});
    return out;
}

std::vector<Box> Multipartition::removable() const {
    std::vector<Box> out;
    for (long m = 0; m < level(); ++m)
        for (long r : component(m).removableRows())
            out.push_back(Box{m, r, component(m).part(r) - 1});
    return out;
}

Multipartition Multipartition::withBoxAdded(const Box& b) const {
    std::vector<Partition> comps = components_;
    comps[static_cast<std::size_t>(b.component)] =
        comps[static_cast<std::size_t>(b.component)].withRowIncremented(b.row);
    return Multipartition(std::move(comps));
}

Multipartition Multipartition::withBoxRemoved(const Box& b) const {
    std::vector<Partition> comps = components_;
    comps[static_cast<std::size_t>(b.component)] =
        comps[static_cast<std::size_t>(b.component)].withRowDecremented(b.row);
    return Multipartition(std::move(comps));
}

std::string Multipartition::toString() const {
    std::ostringstream out;
    out << "[";
    for (long m = 0; m < level(); ++m) {
        if (m) out << "|";
        out << component(m).toString();
    }
    out << "]";
    return out.str();
}

std::vector<Partition> partitionsOf(long n) {
    std::vector<Partition> out;
    std::vector<long> cur;
    // Depth-first with weakly decreasing parts.
    auto rec = [&](auto&& self, long remaining, long maxPart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (long p = std::min(remaining, maxPart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Multipartition> multipartitionsOf(long n, long level) {
    std::vector<std::vector<Partition>> tables(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) tables[static_cast<std::size_t>(k)] = partitionsOf(k);

    std::vector<Multipartition> out;
    std::vector<Partition> cur(static_cast<std::size_t>(level));
    auto rec = [&](auto&& self, long m, long remaining) -> void {
        if (m == level) {
            if (remaining == 0) out.emplace_back(cur);
            return;
        }
        if (m == level - 1) {
            for (const auto& p : tables[static_cast<std::size_t>(remaining)]) {
                cur[static_cast<std::size_t>(m)] = p;
                self(self, m + 1, 0);
            }
            return;
        }
        for (long k = 0; k <= remaining; ++k)
            for (const auto& p : tables[static_cast<std::size_t>(k)]) {
                cur[static_cast<std::size_t>(m)] = p;
                self(self, m + 1, remaining - k);
            }
    };
    rec(rec, 0, n);
    return out;
}

}  // namespace wklr
