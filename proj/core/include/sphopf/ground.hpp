#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace sphopf {

// Atoms are nonzero integers. Negative atoms encode the mirrored half of the
// doubled index sets {-n,...,-1,1,...,n} used by the superclass models; most
// code only ever sees positive atoms.
using Atom = int;

// A finite set of atoms, kept strictly increasing. Value type, cheap to copy
// at the sizes this library works with.
class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<Atom> atoms);
    GroundSet(std::initializer_list<Atom> atoms) : GroundSet(std::vector<Atom>(atoms)) {}

    // {1, 2, ..., n}
    static GroundSet interval(int n);
    // {-n, ..., -1, 1, ..., n}
    static GroundSet mirrored_interval(int n);

    const std::vector<Atom>& atoms() const { return atoms_; }
    int size() const { return static_cast<int>(atoms_.size()); }
    bool empty() const { return atoms_.empty(); }
    Atom min() const;
    bool contains(Atom a) const;
    // Position of `a` in the sorted atom list; throws if absent.
    int position_of(Atom a) const;

    bool disjoint_from(const GroundSet& o) const;
    bool subset_of(const GroundSet& o) const;
    GroundSet set_union(const GroundSet& o) const;
    GroundSet set_intersection(const GroundSet& o) const;
    GroundSet set_difference(const GroundSet& o) const;
    // {-a : a in this}
    GroundSet negated() const;

    auto begin() const { return atoms_.begin(); }
    auto end() const { return atoms_.end(); }

    auto operator<=>(const GroundSet&) const = default;

    // Atoms joined by single spaces, e.g. "1 3 7"; "" for the empty set.
    std::string encode() const;

private:
    std::vector<Atom> atoms_;
};

// A bijection between two ground sets of equal size.
class Bijection {
public:
    Bijection(GroundSet domain, GroundSet codomain, std::vector<Atom> images);

    static Bijection identity(const GroundSet& s);
    // The unique order-preserving bijection between two sets of equal size.
    static Bijection order_preserving(const GroundSet& from, const GroundSet& to);

    const GroundSet& domain() const { return domain_; }
    const GroundSet& codomain() const { return codomain_; }

    Atom operator()(Atom a) const;
    GroundSet image(const GroundSet& subset) const;
    Bijection inverse() const;
    // (*this) after `inner`: first apply inner, then this.
    Bijection compose(const Bijection& inner) const;

private:
    GroundSet domain_;
    GroundSet codomain_;
    std::vector<Atom> images_;  // aligned with domain_.atoms()
};

}  // namespace sphopf
