#pragma once

#include "sphopf/ground.hpp"
#include "sphopf/rational.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace sphopf {

// Integer partition: weakly decreasing sequence of positive parts.
class IntegerPartition {
public:
    IntegerPartition() = default;
    explicit IntegerPartition(std::vector<int> parts);
    IntegerPartition(std::initializer_list<int> parts)
        : IntegerPartition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    // Concatenate parts and re-sort; the cycle type of a disjoint union.
    IntegerPartition merged_with(const IntegerPartition& o) const;

    auto operator<=>(const IntegerPartition&) const = default;

    std::string encode() const;  // "(4,2,1)", "()" for the empty partition

private:
    std::vector<int> parts_;
};

struct PartitionStats {
    BigInt factorial_product;     // prod of part factorials
    BigInt multiplicity_product;  // prod of multiplicity factorials
    BigInt centralizer_order;     // multiplicity_product * prod of parts
    int sign;                     // (-1)^(weight - length)
};

PartitionStats partition_stats(const IntegerPartition& lambda);

// weight(lambda) must equal n; returns n! / (multiplicity_product * factorial_product),
// the number of set partitions of an n-set whose block sizes are lambda.
BigInt count_partitions_of_type(int n, const IntegerPartition& lambda);

// All integer partitions of n, in decreasing lexicographic order of part lists.
std::vector<IntegerPartition> integer_partitions(int n);

// A partition of a finite ground set into nonempty disjoint blocks. Blocks are
// kept sorted by their minimum atom; the canonical text form joins the block
// encodings with '|', e.g. "1 3|2". All deterministic orders in the library
// derive from that encoding.
class SetPartition {
public:
    SetPartition() = default;  // the empty partition of the empty set
    SetPartition(GroundSet ground, std::vector<GroundSet> blocks);

    static SetPartition singletons(const GroundSet& ground);
    static SetPartition one_block(const GroundSet& ground);

    const GroundSet& ground() const { return ground_; }
    const std::vector<GroundSet>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const GroundSet& block_containing(Atom a) const;

    // Blocks induced on a subset of the ground set (empty intersections dropped).
    SetPartition restricted(const GroundSet& sub) const;
    SetPartition relabeled(const Bijection& sigma) const;
    // Disjoint union with a partition of a disjoint ground set.
    SetPartition merged_with(const SetPartition& o) const;

    // Pairs (i, j), i < j, adjacent within a block: no third block element
    // lies strictly between them. Listed in increasing order of (i, j).
    std::vector<std::pair<Atom, Atom>> arcs() const;

    auto operator<=>(const SetPartition&) const = default;

    std::string encode() const;

private:
    GroundSet ground_;
    std::vector<GroundSet> blocks_;
};

bool refines(const SetPartition& x, const SetPartition& y);

// All partitions of the ground set, sorted by canonical encoding. The count is
// the Bell number of |ground|.
std::vector<SetPartition> enumerate_partitions(const GroundSet& ground);

IntegerPartition partition_type(const SetPartition& x);

// Bell numbers via the Bell triangle; independent of enumerate_partitions and
// used to cross-check it.
BigInt bell_number(int n);

}  // namespace sphopf
