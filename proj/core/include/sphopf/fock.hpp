#pragma once

#include "sphopf/engine.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace sphopf {

// Element of a graded Hopf algebra obtained from a Hopf monoid: a sparse
// rational combination of indices, each a labeled set partition of some
// interval {1..n}. Mixed degrees are allowed.
class GradedElement {
public:
    GradedElement() = default;
    explicit GradedElement(Basis basis) : basis_(basis) {}

    static GradedElement one(Basis basis = Basis::Natural);  // degree-0 unit
    static GradedElement of(const LabeledSetPartition& x, Basis basis, Rational coeff = 1);

    Basis basis() const { return basis_; }
    const std::map<LabeledSetPartition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const LabeledSetPartition& x, const Rational& coeff);
    Rational coeff(const LabeledSetPartition& x) const;
    std::map<int, Element> by_degree() const;

    GradedElement& operator+=(const GradedElement& o);
    GradedElement& operator*=(const Rational& c);
    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator*(const Rational& c, GradedElement a) { return a *= c; }
    GradedElement operator-() const;
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a += -b; }
    bool operator==(const GradedElement&) const = default;

private:
    Basis basis_ = Basis::Natural;
    std::map<LabeledSetPartition, Rational> terms_;
};

struct GradedTensor {
    Basis basis = Basis::Natural;
    std::map<std::pair<LabeledSetPartition, LabeledSetPartition>, Rational> terms;

    void add_term(const LabeledSetPartition& l, const LabeledSetPartition& r, const Rational& c);
    bool operator==(const GradedTensor&) const = default;
};

// Product (or coproduct) structure constants between two graded pieces, kept
// with their index keys so tables can be compared across algebras and
// exported as CSV.
struct StructureTable {
    Basis basis = Basis::Natural;
    bool is_product = true;
    int left_degree = 0;
    int right_degree = 0;
    std::vector<std::pair<LabeledSetPartition, LabeledSetPartition>> pairs;
    std::vector<LabeledSetPartition> singles;  // indices of degree left+right
    // product: cells[pair][single]; coproduct: cells[single][pair]
    std::vector<std::vector<Rational>> cells;
};

// A Hopf monoid pushed through a Fock functor. Flavor Full keeps one index
// per basis partition of {1..n}; flavor Coinvariant works with canonical
// representatives of the relabeling orbits, so its degree-n indices
// enumerate a basis of the coinvariant quotient.
class GradedHopfAlgebra {
public:
    enum class Flavor { Full, Coinvariant };

    GradedHopfAlgebra(std::shared_ptr<const SpeciesHopfMonoid> monoid, Flavor flavor);

    const SpeciesHopfMonoid& monoid() const { return *monoid_; }
    std::shared_ptr<const SpeciesHopfMonoid> monoid_ptr() const { return monoid_; }
    Flavor flavor() const { return flavor_; }

    // The orbit element with the lexicographically smallest canonical
    // encoding; deterministic and idempotent.
    LabeledSetPartition canonicalize_orbit(const LabeledSetPartition& x) const;
    bool is_canonical(const LabeledSetPartition& x) const;

    // Degree-n index set, sorted by canonical encoding.
    std::vector<LabeledSetPartition> basis(int degree) const;
    BigInt dimension(int degree) const;

    GradedElement product(const GradedElement& a, const GradedElement& b) const;
    GradedTensor coproduct(const GradedElement& a) const;
    GradedElement convert(const GradedElement& a, Basis target) const;

    // Collapses indices to orbit representatives, summing coefficients; the
    // degreewise surjection from the Full algebra onto this one. Only valid
    // on Coinvariant-flavored algebras.
    GradedElement project(const GradedElement& full_element) const;

    StructureTable product_table(Basis basis, int left_degree, int right_degree) const;
    StructureTable coproduct_table(Basis basis, int left_degree, int right_degree) const;

private:
    std::shared_ptr<const SpeciesHopfMonoid> monoid_;
    Flavor flavor_;
    mutable std::mutex canon_mutex_;
    mutable std::map<LabeledSetPartition, LabeledSetPartition> canon_cache_;

    GradedElement canonicalized(const GradedElement& a) const;
    GradedElement product_natural(const GradedElement& a, const GradedElement& b) const;
    GradedTensor coproduct_natural(const GradedElement& a) const;
};

}  // namespace sphopf
