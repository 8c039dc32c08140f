#include "sphopf/poset.hpp"

#include <stdexcept>

namespace sphopf {

FinitePoset::FinitePoset(const std::vector<std::vector<bool>>& leq) {
    n_ = static_cast<int>(leq.size());
    words_ = (n_ + 63) / 64;
    rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(leq[i].size()) != n_)
            throw std::invalid_argument("FinitePoset: relation matrix not square");
        for (int j = 0; j < n_; ++j)
            if (leq[i][j]) rows_[i * words_ + j / 64] |= std::uint64_t(1) << (j % 64);
    }
    validate();
}

void FinitePoset::validate() const {
    for (int i = 0; i < n_; ++i)
        if (!leq(i, i)) throw std::invalid_argument("FinitePoset: relation not reflexive");
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i != j && leq(i, j) && leq(j, i))
                throw std::invalid_argument("FinitePoset: relation not antisymmetric");
            if (leq(i, j)) {
                // row(j) must be contained in row(i)
                for (int w = 0; w < words_; ++w)
                    if (rows_[j * words_ + w] & ~rows_[i * words_ + w])
                        throw std::invalid_argument("FinitePoset: relation not transitive");
            }
        }
}

bool FinitePoset::leq(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::invalid_argument("FinitePoset: element out of range");
    return (rows_[i * words_ + j / 64] >> (j % 64)) & 1;
}

BigInt FinitePoset::mobius(int x, int y) const {
    std::lock_guard<std::mutex> lock(mobius_mutex_);
    return mobius_locked(x, y);
}

BigInt FinitePoset::mobius_locked(int x, int y) const {
    if (!leq(x, y)) return 0;
    if (x == y) return 1;
    auto it = mobius_cache_.find({x, y});
    if (it != mobius_cache_.end()) return it->second;
    BigInt sum = 0;
    for (int z = 0; z < n_; ++z)
        if (z != y && leq(x, z) && leq(z, y)) sum += mobius_locked(x, z);
    BigInt value = -sum;
    mobius_cache_.emplace(std::make_pair(x, y), value);
    return value;
}

std::vector<int> FinitePoset::elements_between(int x, int y) const {
    std::vector<int> out;
    for (int z = 0; z < n_; ++z)
        if (leq(x, z) && leq(z, y)) out.push_back(z);
    return out;
}

bool FinitePoset::covers(int i, int j) const {
    if (i == j || !leq(i, j)) return false;
    for (int z = 0; z < n_; ++z)
        if (z != i && z != j && leq(i, z) && leq(z, j)) return false;
    return true;
}

std::vector<std::pair<int, int>> FinitePoset::cover_relations() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (covers(i, j)) out.emplace_back(i, j);
    return out;
}

std::vector<int> FinitePoset::minimal_elements() const {
    std::vector<int> out;
    for (int j = 0; j < n_; ++j) {
        bool minimal = true;
        for (int i = 0; i < n_ && minimal; ++i)
            if (i != j && leq(i, j)) minimal = false;
        if (minimal) out.push_back(j);
    }
    return out;
}

}  // namespace sphopf
