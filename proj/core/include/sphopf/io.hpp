#pragma once

#include "sphopf/classfun.hpp"
#include "sphopf/engine.hpp"
#include "sphopf/fock.hpp"
#include "sphopf/superclass.hpp"
#include "sphopf/symfun.hpp"

#include <string>
#include <vector>

namespace sphopf {

// All encoders produce byte-stable output for a fixed input: term orders come
// from the canonical orderings of the underlying maps.

// Inverse of SpeciesHopfMonoid::encode for one basis partition: blocks joined
// by '|', each "atoms" or "atoms=label" with the species' label encoding.
LabeledSetPartition parse_labeled(const SpeciesHopfMonoid& monoid, const std::string& text);

std::string element_to_json(const SpeciesHopfMonoid& monoid, const Element& x);
std::string tensor_to_json(const SpeciesHopfMonoid& monoid, const TensorElement& t);
std::string graded_element_to_json(const SpeciesHopfMonoid& monoid, const GradedElement& x);
std::string graded_tensor_to_json(const SpeciesHopfMonoid& monoid, const GradedTensor& t);
std::string class_function_to_json(const ClassFunction& f);
std::string sym_element_to_json(const SymElement& s);

// "x1 x2 x1" for words, "x1^2 x3" for monomials.
std::string pretty(const WordPolynomial& f);
std::string pretty(const MonomialPolynomial& f);
std::string word_polynomial_to_json(const WordPolynomial& f);
std::string monomial_polynomial_to_json(const MonomialPolynomial& f);

std::string structure_table_to_csv(const SpeciesHopfMonoid& monoid, const StructureTable& t);
std::string poset_to_dot(const SpeciesHopfMonoid& monoid, const ComponentPoset& poset);

struct DimensionRow {
    std::string model;
    int n = 0;
    int q = 0;
    BigInt dimension;
};
std::string dimensions_to_csv(const std::vector<DimensionRow>& rows);

std::string report_to_text(const Report& report);

}  // namespace sphopf
