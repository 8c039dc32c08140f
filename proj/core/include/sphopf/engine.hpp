#pragma once

#include "sphopf/labels.hpp"
#include "sphopf/partition.hpp"
#include "sphopf/poset.hpp"
#include "sphopf/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sphopf {

// The five bases of the engine: the natural basis of labeled set partitions
// plus the four Moebius-derived bases.
enum class Basis : std::uint8_t { Natural, M, P, E, H };

std::string to_string(Basis b);
Basis parse_basis(const std::string& s);

// A Q-labeled set partition: disjoint nonempty blocks covering the ground
// set, each carrying a canonical label. Blocks are sorted by minimum atom.
class LabeledSetPartition {
public:
    LabeledSetPartition() = default;  // partition of the empty set
    LabeledSetPartition(GroundSet ground, std::vector<std::pair<GroundSet, Label>> blocks);

    const GroundSet& ground() const { return ground_; }
    const std::vector<std::pair<GroundSet, Label>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    bool empty() const { return blocks_.empty(); }

    SetPartition shape() const;

    auto operator<=>(const LabeledSetPartition&) const = default;

private:
    GroundSet ground_;
    std::vector<std::pair<GroundSet, Label>> blocks_;
};

// A sparse rational linear combination of labeled set partitions of one
// ground set, tagged with the basis its coordinates refer to.
class Element {
public:
    Element() = default;
    Element(GroundSet component, Basis basis) : component_(std::move(component)), basis_(basis) {}

    static Element unit(Basis basis = Basis::Natural);  // 1 on the empty component
    static Element of(const LabeledSetPartition& x, Basis basis, Rational coeff = 1);

    const GroundSet& component() const { return component_; }
    Basis basis() const { return basis_; }
    const std::map<LabeledSetPartition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const LabeledSetPartition& x, const Rational& coeff);
    Rational coeff(const LabeledSetPartition& x) const;

    Element& operator+=(const Element& o);
    Element& operator*=(const Rational& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator*(Element a, const Rational& c) { return a *= c; }
    friend Element operator*(const Rational& c, Element a) { return a *= c; }
    Element operator-() const;
    friend Element operator-(Element a, const Element& b) { return a += -b; }
    friend bool operator==(const Element& a, const Element& b) {
        return a.component_ == b.component_ && a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

private:
    GroundSet component_;
    Basis basis_ = Basis::Natural;
    std::map<LabeledSetPartition, Rational> terms_;
};

// Sparse element of a two-fold tensor component, indexed by pairs of basis
// partitions. Tensor spaces are never materialized densely.
struct TensorElement {
    GroundSet left_component;
    GroundSet right_component;
    Basis basis = Basis::Natural;
    std::map<std::pair<LabeledSetPartition, LabeledSetPartition>, Rational> terms;

    void add_term(const LabeledSetPartition& l, const LabeledSetPartition& r, const Rational& c);
    bool operator==(const TensorElement&) const = default;
};

// k-fold analogue used by the iterated coproduct.
struct MultiTensor {
    std::vector<GroundSet> components;
    Basis basis = Basis::Natural;
    std::map<std::vector<LabeledSetPartition>, Rational> terms;

    void add_term(const std::vector<LabeledSetPartition>& factors, const Rational& c);
};

// One component of the free commutative Hopf monoid, fully enumerated and
// partially ordered; provides Moebius values and the transition data between
// the five bases.
class ComponentPoset {
public:
    ComponentPoset(std::vector<LabeledSetPartition> elements,
                   std::vector<std::vector<bool>> leq);

    int size() const { return static_cast<int>(elements_.size()); }
    const LabeledSetPartition& element(int i) const { return elements_[i]; }
    const std::vector<LabeledSetPartition>& elements() const { return elements_; }
    int index_of(const LabeledSetPartition& x) const;
    bool leq(int i, int j) const { return poset_.leq(i, j); }
    BigInt mobius(int i, int j) const { return poset_.mobius(i, j); }
    const std::vector<int>& lower(int i) const { return lower_[i]; }  // {j : j <= i}
    const std::vector<int>& upper(int i) const { return upper_[i]; }  // {j : j >= i}
    const FinitePoset& poset() const { return poset_; }

private:
    std::vector<LabeledSetPartition> elements_;
    std::map<LabeledSetPartition, int> index_;
    FinitePoset poset_;
    std::vector<std::vector<int>> lower_;
    std::vector<std::vector<int>> upper_;
};

struct SizeGuard {
    int trivial_max = 6;  // components with trivial labels
    int general_max = 5;  // everything else
};

// Thrown when an operation would enumerate a component beyond the configured
// size guard.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckResult {
    std::string identity;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::string title;
    std::vector<CheckResult> checks;

    bool ok() const;
    void record(const std::string& identity, bool passed, const std::string& detail = "");
};

// The free commutative Hopf monoid on a label comonoid: natural basis of
// Q-labeled set partitions, product by disjoint union, coproduct by block
// splitting, the induced partial order, and the m/p/e/h bases.
class SpeciesHopfMonoid {
public:
    explicit SpeciesHopfMonoid(LabelSpeciesPtr labels, SizeGuard guard = {});

    const LabelSpecies& labels() const { return *labels_; }
    LabelSpeciesPtr labels_ptr() const { return labels_; }
    const SizeGuard& guard() const { return guard_; }
    int guard_limit() const;

    // ----- basis-level structure (the linearized maps) -----

    LabeledSetPartition merge(const LabeledSetPartition& x, const LabeledSetPartition& y) const;
    // The S-component of the coproduct of z: blocks cut down to S, labels
    // restricted; strong linearization keeps every piece a basis element.
    LabeledSetPartition restrict_to(const LabeledSetPartition& z, const GroundSet& s) const;
    std::pair<LabeledSetPartition, LabeledSetPartition> split(
        const LabeledSetPartition& z, const GroundSet& s, const GroundSet& t) const;
    LabeledSetPartition relabel(const Bijection& sigma, const LabeledSetPartition& x) const;
    std::string encode(const LabeledSetPartition& x) const;

    // ----- linear operations -----

    Element nabla(const Element& x, const Element& y) const;
    TensorElement delta(const Element& z, const GroundSet& s, const GroundSet& t) const;
    // Iterated product/coproduct over an ordered decomposition; any
    // composition order yields the same maps, and k = 1 is the identity.
    Element nabla_multi(const std::vector<Element>& factors) const;
    MultiTensor delta_multi(const Element& z, const std::vector<GroundSet>& parts) const;

    // ----- the partial order and its consequences -----

    // True iff every block (B, lab) of y decomposes into blocks of x whose
    // labels are the restrictions of lab.
    bool order_leq(const LabeledSetPartition& x, const LabeledSetPartition& y) const;
    std::vector<LabeledSetPartition> enumerate_component(const GroundSet& component) const;
    std::shared_ptr<const ComponentPoset> component_poset(const GroundSet& component) const;

    // Product over blocks of (-1)^(|B|-1) (|B|-1)!; equals the recursive
    // Moebius value of the lower interval [minimum_below(x), x].
    BigInt mobius_closed_form(const LabeledSetPartition& x) const;
    // The all-singletons split of x, the unique minimum below it.
    LabeledSetPartition minimum_below(const LabeledSetPartition& x) const;

    Element convert(const Element& x, Basis target) const;

    // Closed-form structure rules in the m/p/e/h bases. Cross-checked against
    // conversion through the natural basis by the tests.
    Element structure_product(Basis basis, const LabeledSetPartition& alpha,
                              const LabeledSetPartition& beta) const;
    TensorElement structure_coproduct(Basis basis, const LabeledSetPartition& x,
                                      const GroundSet& s, const GroundSet& t) const;

    // Exhaustively checks (co)associativity, (co)commutativity, unit/counit
    // laws, the four-subset compatibility square, and split-after-merge
    // identity on one component.
    Report verify_hopf_axioms(const GroundSet& component) const;

private:
    LabelSpeciesPtr labels_;
    SizeGuard guard_;
    mutable std::mutex cache_mutex_;
    mutable std::map<GroundSet, std::shared_ptr<const ComponentPoset>> poset_cache_;

    void check_guard(const GroundSet& component) const;
    // coefficient-vector transforms over a component poset
    std::vector<Rational> to_p_coords(const ComponentPoset& cp, const Element& x) const;
    Element from_p_coords(const ComponentPoset& cp, const std::vector<Rational>& p,
                          Basis target, const GroundSet& component) const;
};

// All ordered pairs (S, T) with S disjoint-union T = ground.
std::vector<std::pair<GroundSet, GroundSet>> ordered_decompositions(const GroundSet& ground);

// A set partition viewed as a trivially labeled basis element.
LabeledSetPartition with_trivial_labels(const SetPartition& shape);

}  // namespace sphopf
