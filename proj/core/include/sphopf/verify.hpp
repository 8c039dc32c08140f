#pragma once

#include "sphopf/engine.hpp"
#include "sphopf/labels.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace sphopf::verify {

// The bundled label species exercised by the structural suites, with the
// component sizes they are checked at.
struct SpeciesUnderTest {
    LabelSpeciesPtr species;
    int n_max;
};
std::vector<SpeciesUnderTest> bundled_species();

// Suite 1: product/coproduct axioms and compatibility on all components.
Report hopf_axioms(const SpeciesHopfMonoid& monoid, int n_max);

// Suite 2: the closed-form Moebius value of every basis element matches the
// recursive one on its lower interval.
Report mobius_closed_form(const SpeciesHopfMonoid& monoid, int n_max);

// Suite 3: lower intervals of single-block elements have Bell-number size
// and the shape map is an order isomorphism onto the refinement lattice;
// also, the order agrees with the transitive closure of two-part
// merge-after-split steps.
Report poset_isomorphism(const SpeciesHopfMonoid& monoid, int n_max);

// Suite 4: closed-form structure rules in the m/p/e/h bases match
// conversion through the natural basis; the sign twist exchanges e and h.
Report basis_rules(const SpeciesHopfMonoid& monoid, int n_max);

// Suite 5: truncated polynomial models of the two set-partition Hopf
// algebras (see symfun).
Report ncsym_sym(int n_max, int k);

// Suite 6: function-algebra dictionaries for the permutation model.
Report class_functions(int n_max);

// Suite 7: the lifting map against its image formulas.
Report lifting_map(int n_max);

// Suite 8: superclass models, arc bijections, dimensions, and the
// size-driven isomorphism with its negative control.
Report superclass_models(int n_max);

// Suite 9: the terminal morphism for the bundled hosts.
Report terminal_morphism(int n_max);

// Suite 10: byte-identical repeated output. When cli_path is nonempty the
// actual binary is executed twice per format.
Report determinism(const std::string& cli_path);

// Dispatch by suite name; throws std::invalid_argument for unknown names.
Report run_suite(const std::string& name, const std::string& species_selector, int n,
                 int k, const std::string& cli_path);
std::vector<std::string> suite_names();

}  // namespace sphopf::verify
