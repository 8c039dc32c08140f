#pragma once

#include "sphopf/engine.hpp"
#include "sphopf/fock.hpp"
#include "sphopf/partition.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sphopf {

using Word = std::vector<int>;  // letters 1..k, juxtaposed noncommuting variables

// Polynomial in k noncommuting variables: sparse map from words to exact
// coefficients. Multiplication concatenates words.
class WordPolynomial {
public:
    explicit WordPolynomial(int alphabet) : alphabet_(alphabet) {}

    int alphabet() const { return alphabet_; }
    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const Rational& c);

    WordPolynomial& operator+=(const WordPolynomial& o);
    WordPolynomial& operator*=(const Rational& c);
    WordPolynomial operator*(const WordPolynomial& o) const;
    friend WordPolynomial operator*(const Rational& c, WordPolynomial p) { return p *= c; }
    bool operator==(const WordPolynomial&) const = default;

private:
    int alphabet_;
    std::map<Word, Rational> terms_;
};

// Polynomial in k commuting variables: sparse map from exponent vectors of
// length k to coefficients.
class MonomialPolynomial {
public:
    explicit MonomialPolynomial(int alphabet) : alphabet_(alphabet) {}

    int alphabet() const { return alphabet_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& exponents, const Rational& c);

    MonomialPolynomial& operator+=(const MonomialPolynomial& o);
    MonomialPolynomial& operator*=(const Rational& c);
    MonomialPolynomial operator*(const MonomialPolynomial& o) const;
    friend MonomialPolynomial operator*(const Rational& c, MonomialPolynomial p) { return p *= c; }
    bool operator==(const MonomialPolynomial&) const = default;

private:
    int alphabet_;
    std::map<std::vector<int>, Rational> terms_;
};

// Degree-|ground| truncated expansion of the classical bases indexed by set
// partitions, in k noncommuting variables. Accepts m, p, e, h.
WordPolynomial expand_ncsym(Basis basis, const SetPartition& shape, int k);

// Truncated expansion of the classical bases indexed by integer partitions,
// in k commuting variables. Accepts m, p, e, h.
MonomialPolynomial expand_sym(Basis basis, const IntegerPartition& lambda, int k);

// Lets the variables commute: every word collapses to its exponent vector.
MonomialPolynomial rho(const WordPolynomial& f);

// Coproduct scaffolding: reads a polynomial over 2k letters as a polynomial
// in the interleaved alphabet x1,y1,x2,y2,... and separates each term into
// its x-part and y-part (both over k letters).
std::map<std::pair<Word, Word>, Rational> split_alphabet(const WordPolynomial& f);
std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> split_alphabet(
    const MonomialPolynomial& f);

// Expansion of a graded element with trivial labels (an element of the image
// of the full Fock functor on set partitions) in k noncommuting variables.
WordPolynomial expand_graded_ncsym(const GradedElement& a, int k);

// Abstract element of the symmetric-function algebra: coordinates over one
// of the classical bases. Exact; realized concretely through expansion.
struct SymElement {
    Basis basis = Basis::P;
    std::map<IntegerPartition, Rational> terms;

    void add_term(const IntegerPartition& lambda, const Rational& c);
    MonomialPolynomial expansion(int k) const;
    bool operator==(const SymElement&) const = default;
};

// Exact change of basis, computed by solving the truncated expansions with
// enough variables to be faithful.
SymElement sym_convert(const SymElement& s, Basis target);

// The scalar by which the coinvariant-level isomorphism rescales a basis
// element of type lambda: 1 for p, multiplicity factorial for m, part
// factorial product for e and h.
Rational coinvariant_scalar(Basis basis, const IntegerPartition& lambda);

// Checks that the truncated expansions intertwine the graded products and
// coproducts of the set-partition Hopf algebras with those of the polynomial
// models, at both the full and coinvariant levels, for all four bases up to
// the given total degree. k must be at least n_max.
Report verify_f_iso(int n_max, int k);

}  // namespace sphopf
