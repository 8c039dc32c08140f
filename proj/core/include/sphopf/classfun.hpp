#pragma once

#include "sphopf/engine.hpp"
#include "sphopf/fock.hpp"
#include "sphopf/partition.hpp"
#include "sphopf/symfun.hpp"

#include <map>
#include <utility>
#include <vector>

namespace sphopf {

// A permutation of {1..n}, stored by its images.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    static std::vector<Permutation> all(int n);  // lexicographic by image list

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const;  // 1-based
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    Permutation compose(const Permutation& inner) const;  // (*this) after inner
    Permutation conjugated_by(const Permutation& tau) const;  // tau (*this) tau^{-1}

    // Cycles listed min-first and sorted by minimum; fixed points included.
    std::vector<std::vector<int>> cycles() const;
    IntegerPartition cycle_type() const;

    // The subgroup embedding: a acts on {1..m}, b on the shifted block.
    static Permutation embed_product(const Permutation& a, const Permutation& b);
    // Whether {1..m} is stable; if so the permutation splits through the
    // embedding above.
    bool stabilizes_prefix(int m) const;
    std::pair<Permutation, Permutation> split_prefix(int m) const;

    // Rank in the lexicographic order of image lists (factorial number system).
    long long lex_rank() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// Dense exact-valued function on one symmetric group.
class GroupFunction {
public:
    explicit GroupFunction(int degree);
    static GroupFunction indicator(const Permutation& sigma);
    static GroupFunction class_indicator(int degree, const IntegerPartition& type);
    static GroupFunction trivial_character(int degree);
    static GroupFunction sign_character(int degree);

    int degree() const { return degree_; }
    const Rational& value(const Permutation& sigma) const;
    void set_value(const Permutation& sigma, const Rational& v);
    void add_value(const Permutation& sigma, const Rational& v);
    bool is_class_function() const;

    GroupFunction& operator+=(const GroupFunction& o);
    GroupFunction& operator*=(const Rational& c);
    friend GroupFunction operator+(GroupFunction a, const GroupFunction& b) { return a += b; }
    friend GroupFunction operator*(const Rational& c, GroupFunction a) { return a *= c; }
    bool operator==(const GroupFunction&) const = default;

private:
    int degree_;
    std::vector<Rational> values_;  // indexed by lex rank
};

// Class function stored sparsely by cycle type.
class ClassFunction {
public:
    explicit ClassFunction(int degree) : degree_(degree) {}
    static ClassFunction indicator(int degree, const IntegerPartition& type);
    static ClassFunction from_function(const GroupFunction& f);  // must be class-constant

    int degree() const { return degree_; }
    const std::map<IntegerPartition, Rational>& values() const { return values_; }
    Rational value(const IntegerPartition& type) const;
    void add_value(const IntegerPartition& type, const Rational& v);
    GroupFunction densify() const;

    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator*=(const Rational& c);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator*(const Rational& c, ClassFunction a) { return a *= c; }
    bool operator==(const ClassFunction&) const = default;

private:
    int degree_;
    std::map<IntegerPartition, Rational> values_;
};

struct FunTensor {
    int left_degree = 0;
    int right_degree = 0;
    std::map<std::pair<Permutation, Permutation>, Rational> terms;
    bool operator==(const FunTensor&) const = default;
};

struct ClassTensor {
    int left_degree = 0;
    int right_degree = 0;
    std::map<std::pair<IntegerPartition, IntegerPartition>, Rational> terms;
    bool operator==(const ClassTensor&) const = default;
};

// f x g extended by zero off the embedded product subgroup: the product of
// the all-functions Hopf algebra.
GroupFunction fun_product(const GroupFunction& f, const GroupFunction& g);
// Sum of the restrictions along every order-parametrized embedding of a
// product subgroup, one tensor per bidegree. (Restricting only along the
// standard prefix embedding would not be compatible with the product on
// plain functions; on class functions the two conventions differ by
// binomial multiplicities and the prefix one is used there.)
std::vector<FunTensor> fun_coproduct(const GroupFunction& f);

// Averaging over conjugation: x maps to the sum of f at all conjugates of x.
// Sends the indicator of sigma to centralizer_order(type) times the class
// indicator of its type.
GroupFunction average_conjugation(const GroupFunction& f);

// Exact induction of f (x) g from the embedded product subgroup.
GroupFunction induce_product(const GroupFunction& f, const GroupFunction& g);
ClassFunction induce_class(const ClassFunction& f, const ClassFunction& g);
std::vector<ClassTensor> class_coproduct(const ClassFunction& f);
// Induction of the trivial (or sign) character from the Young subgroup of
// the type, computed by iterated induction in stages.
ClassFunction induced_young_character(const IntegerPartition& lambda, bool sign);

// The identifications between permutations and cyclically labeled set
// partitions (blocks are the cycles).
LabeledSetPartition permutation_to_labeled(const Permutation& sigma);
Permutation labeled_to_permutation(const LabeledSetPartition& x);

// Dictionary isomorphisms, both mapping the p-basis: at the full level the
// index becomes a point indicator, at the coinvariant level it becomes the
// centralizer-order multiple of its class indicator. Inputs are converted to
// the p-basis; output is split by degree.
std::map<int, GroupFunction> iso_f(const GradedHopfAlgebra& alg, const GradedElement& a);
std::map<int, ClassFunction> iso_fbar(const GradedHopfAlgebra& alg, const GradedElement& a);

// The characteristic isomorphism: centralizer_order * class indicator of
// lambda maps to the power sum of lambda.
SymElement frobenius(const ClassFunction& f);
ClassFunction frobenius_inverse(const SymElement& s);

// The lifting map into the set-partition Hopf algebra, computed literally as
// the composite through functions on the symmetric groups. Output is in the
// p-basis of the full set-partition algebra (trivial labels).
GradedElement lift_rho_tilde(const SymElement& s);

}  // namespace sphopf
