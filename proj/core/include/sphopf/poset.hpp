#pragma once

#include "sphopf/rational.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace sphopf {

// A finite poset on elements 0..n-1, stored as a bit matrix of the reflexive
// relation. Construction validates reflexivity, antisymmetry and transitivity.
// Moebius values are memoized; the cache is internally synchronized so shared
// instances can be queried from several threads.
class FinitePoset {
public:
    explicit FinitePoset(const std::vector<std::vector<bool>>& leq);

    int size() const { return n_; }
    bool leq(int i, int j) const;
    bool less(int i, int j) const { return i != j && leq(i, j); }

    // Unique function with mobius(x,x) = 1, mobius(x,y) = 0 unless x <= y, and
    // sum of mobius(x,z) over x <= z <= y vanishing for x < y.
    BigInt mobius(int x, int y) const;

    std::vector<int> elements_between(int x, int y) const;  // {z : x <= z <= y}
    bool covers(int i, int j) const;                        // j covers i
    std::vector<std::pair<int, int>> cover_relations() const;
    std::vector<int> minimal_elements() const;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> rows_;  // rows_[i*words_ ...]: bitset of {j : i <= j}

    mutable std::mutex mobius_mutex_;
    mutable std::map<std::pair<int, int>, BigInt> mobius_cache_;

    BigInt mobius_locked(int x, int y) const;
    void validate() const;
};

}  // namespace sphopf
