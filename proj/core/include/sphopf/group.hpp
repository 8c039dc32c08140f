#pragma once

#include <string>
#include <vector>

namespace sphopf {

// A finite group given by its multiplication table. Element 0 is the identity.
// Group laws are verified at construction; orders stay tiny (at most ~12), so
// the cubic associativity check is nothing.
class FiniteGroup {
public:
    FiniteGroup(std::string name, std::vector<std::vector<int>> table);

    int order() const { return static_cast<int>(table_.size()); }
    int mul(int g, int h) const { return table_[g][h]; }
    int inv(int g) const { return inverse_[g]; }
    const std::string& name() const { return name_; }

    static constexpr int identity = 0;

private:
    std::string name_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
};

FiniteGroup cyclic_group(int n);

// The group of order 2|G| on {+g} and {-g} with (+g)(+h) = (-g)(-h) = +gh and
// mixed signs multiplying to -gh; isomorphic to G x S2. Element g of the input
// becomes +g = g, and -g = |G| + g; the identity is +identity.
FiniteGroup make_signed_group(const FiniteGroup& g);

}  // namespace sphopf
