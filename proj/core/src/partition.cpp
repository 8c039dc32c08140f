#include "sphopf/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace sphopf {

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw std::invalid_argument("IntegerPartition: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int IntegerPartition::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

IntegerPartition IntegerPartition::merged_with(const IntegerPartition& o) const {
    std::vector<int> parts = parts_;
    parts.insert(parts.end(), o.parts_.begin(), o.parts_.end());
    return IntegerPartition(std::move(parts));
}

std::string IntegerPartition::encode() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

PartitionStats partition_stats(const IntegerPartition& lambda) {
    PartitionStats st{1, 1, 1, 1};
    std::map<int, int> mult;
    for (int p : lambda.parts()) {
        st.factorial_product *= factorial(p);
        ++mult[p];
    }
    for (const auto& [part, m] : mult) st.multiplicity_product *= factorial(m);
    st.centralizer_order = st.multiplicity_product;
    for (int p : lambda.parts()) st.centralizer_order *= p;
    st.sign = (lambda.weight() - lambda.length()) % 2 == 0 ? 1 : -1;
    return st;
}

BigInt count_partitions_of_type(int n, const IntegerPartition& lambda) {
    if (lambda.weight() != n)
        throw std::invalid_argument("count_partitions_of_type: weight mismatch");
    PartitionStats st = partition_stats(lambda);
    return factorial(n) / (st.multiplicity_product * st.factorial_product);
}

std::vector<IntegerPartition> integer_partitions(int n) {
    std::vector<IntegerPartition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

SetPartition::SetPartition(GroundSet ground, std::vector<GroundSet> blocks)
    : ground_(std::move(ground)), blocks_(std::move(blocks)) {
    int total = 0;
    for (const GroundSet& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
        if (!b.subset_of(ground_))
            throw std::invalid_argument("SetPartition: block not contained in ground set");
        total += b.size();
    }
    if (total != ground_.size())
        throw std::invalid_argument("SetPartition: blocks do not partition the ground set");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const GroundSet& a, const GroundSet& b) { return a.min() < b.min(); });
    for (Atom a : ground_) {
        int hits = 0;
        for (const GroundSet& b : blocks_) hits += b.contains(a) ? 1 : 0;
        if (hits != 1) throw std::invalid_argument("SetPartition: blocks overlap or miss an atom");
    }
}

SetPartition SetPartition::singletons(const GroundSet& ground) {
    std::vector<GroundSet> blocks;
    blocks.reserve(ground.size());
    for (Atom a : ground) blocks.push_back(GroundSet({a}));
    return SetPartition(ground, std::move(blocks));
}

SetPartition SetPartition::one_block(const GroundSet& ground) {
    if (ground.empty()) return SetPartition();
    return SetPartition(ground, {ground});
}

const GroundSet& SetPartition::block_containing(Atom a) const {
    for (const GroundSet& b : blocks_)
        if (b.contains(a)) return b;
    throw std::invalid_argument("SetPartition: atom not in ground set");
}

SetPartition SetPartition::restricted(const GroundSet& sub) const {
    if (!sub.subset_of(ground_))
        throw std::invalid_argument("SetPartition::restricted: not a subset");
    std::vector<GroundSet> blocks;
    for (const GroundSet& b : blocks_) {
        GroundSet c = b.set_intersection(sub);
        if (!c.empty()) blocks.push_back(std::move(c));
    }
    return SetPartition(sub, std::move(blocks));
}

SetPartition SetPartition::relabeled(const Bijection& sigma) const {
    if (sigma.domain() != ground_)
        throw std::invalid_argument("SetPartition::relabeled: domain mismatch");
    std::vector<GroundSet> blocks;
    blocks.reserve(blocks_.size());
    for (const GroundSet& b : blocks_) blocks.push_back(sigma.image(b));
    return SetPartition(sigma.codomain(), std::move(blocks));
}

SetPartition SetPartition::merged_with(const SetPartition& o) const {
    if (!ground_.disjoint_from(o.ground_))
        throw std::invalid_argument("SetPartition::merged_with: ground sets overlap");
    std::vector<GroundSet> blocks = blocks_;
    blocks.insert(blocks.end(), o.blocks_.begin(), o.blocks_.end());
    return SetPartition(ground_.set_union(o.ground_), std::move(blocks));
}

std::vector<std::pair<Atom, Atom>> SetPartition::arcs() const {
    std::vector<std::pair<Atom, Atom>> out;
    for (const GroundSet& b : blocks_)
        for (int i = 0; i + 1 < b.size(); ++i)
            out.emplace_back(b.atoms()[i], b.atoms()[i + 1]);
    std::sort(out.begin(), out.end());
    return out;
}

std::string SetPartition::encode() const {
    std::string s;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) s += '|';
        s += blocks_[i].encode();
    }
    return s;
}

bool refines(const SetPartition& x, const SetPartition& y) {
    if (x.ground() != y.ground())
        throw std::invalid_argument("refines: ground sets differ");
    for (const GroundSet& b : x.blocks())
        if (!b.subset_of(y.block_containing(b.min()))) return false;
    return true;
}

std::vector<SetPartition> enumerate_partitions(const GroundSet& ground) {
    std::vector<SetPartition> out;
    std::vector<std::vector<Atom>> blocks;
    const auto& atoms = ground.atoms();
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == atoms.size()) {
            std::vector<GroundSet> gs;
            gs.reserve(blocks.size());
            for (const auto& b : blocks) gs.emplace_back(b);
            out.emplace_back(ground, std::move(gs));
            return;
        }
        // index-based: deeper recursion grows the block vector and would
        // invalidate references
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(atoms[i]);
            rec(i + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({atoms[i]});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const SetPartition& a, const SetPartition& b) {
        return a.encode() < b.encode();
    });
    return out;
}

IntegerPartition partition_type(const SetPartition& x) {
    std::vector<int> parts;
    parts.reserve(x.block_count());
    for (const GroundSet& b : x.blocks()) parts.push_back(b.size());
    return IntegerPartition(std::move(parts));
}

BigInt bell_number(int n) {
    if (n < 0) throw std::invalid_argument("bell_number: negative argument");
    std::vector<BigInt> row = {1};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next;
        next.reserve(i + 1);
        next.push_back(row.back());
        for (const BigInt& v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

}  // namespace sphopf
