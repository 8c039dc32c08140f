#include "sphopf/group.hpp"

#include <stdexcept>

namespace sphopf {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
    const int n = static_cast<int>(table_.size());
    if (n == 0) throw std::invalid_argument("FiniteGroup: empty table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("FiniteGroup: table not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("FiniteGroup: entry out of range");
    }
    for (int g = 0; g < n; ++g)
        if (table_[0][g] != g || table_[g][0] != g)
            throw std::invalid_argument("FiniteGroup: element 0 is not an identity");
    inverse_.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h)
            if (table_[g][h] == identity && table_[h][g] == identity) {
                inverse_[g] = h;
                break;
            }
        if (inverse_[g] < 0) throw std::invalid_argument("FiniteGroup: missing inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw std::invalid_argument("FiniteGroup: not associative");
}

FiniteGroup cyclic_group(int n) {
    if (n <= 0) throw std::invalid_argument("cyclic_group: order must be positive");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    return FiniteGroup("Z" + std::to_string(n), std::move(table));
}

FiniteGroup make_signed_group(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<std::vector<int>> table(2 * n, std::vector<int>(2 * n));
    for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; b < 2 * n; ++b) {
            int product = g.mul(a % n, b % n);
            bool negative = (a >= n) != (b >= n);
            table[a][b] = negative ? n + product : product;
        }
    return FiniteGroup("signed(" + g.name() + ")", std::move(table));
}

}  // namespace sphopf
