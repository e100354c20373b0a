#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace wklr {

// An integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);

    const std::vector<long>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    long size() const;                 // number of boxes
    long rows() const { return static_cast<long>(parts_.size()); }
    long part(long row) const;         // 0-based row; 0 beyond the last row
    long colLength(long col) const;    // 0-based column; length of that column

    Partition conjugate() const;

    // Row indices (0-based) where a box may be added / removed keeping a
    // partition; the virtual row rows() is addable.
    std::vector<long> addableRows() const;
    std::vector<long> removableRows() const;

    Partition withRowIncremented(long row) const;
    Partition withRowDecremented(long row) const;

    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition& o) const = default;

    std::string toString() const;

private:
    std::vector<long> parts_;
};

// A box of a multipartition diagram.  Internally 0-based in all three
// coordinates; rendered 1-based at I/O boundaries.
struct Box {
    long component = 0;
    long row = 0;
    long col = 0;

    auto operator<=>(const Box&) const = default;
};

// An l-tuple of partitions.
class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> components)
        : components_(std::move(components)) {}
    static Multipartition empty(long level) {
        return Multipartition(std::vector<Partition>(static_cast<std::size_t>(level)));
    }

    long level() const { return static_cast<long>(components_.size()); }
    const Partition& component(long m) const { return components_[static_cast<std::size_t>(m)]; }
    const std::vector<Partition>& components() const { return components_; }
    long size() const;

    bool contains(const Box& b) const;
    std::vector<Box> boxes() const;

    // Boxes addable to / removable from the diagram (classical sense,
    // ignoring residues).
    std::vector<Box> addable() const;
    std::vector<Box> removable() const;

    Multipartition withBoxAdded(const Box& b) const;
    Multipartition withBoxRemoved(const Box& b) const;

    auto operator<=>(const Multipartition& o) const { return components_ <=> o.components_; }
    bool operator==(const Multipartition& o) const = default;

    std::string toString() const;

private:
    std::vector<Partition> components_;
};

// All partitions of n, in lexicographically decreasing part-list order.
std::vector<Partition> partitionsOf(long n);

// All l-multipartitions of total size n (every distribution of n over the
// components), deterministic order.
std::vector<Multipartition> multipartitionsOf(long n, long level);

}  // namespace wklr
