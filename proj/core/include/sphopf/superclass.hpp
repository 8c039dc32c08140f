#pragma once

#include "sphopf/engine.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sphopf {

// A set partition whose arcs (adjacent-in-block pairs) carry group-element
// indices. Over mirrored ground sets {-n..-1, 1..n} these model the
// superclass index sets of the orthogonal and symplectic towers; over {1..n}
// they model the special linear tower.
struct ArcLabeledPartition {
    SetPartition partition;
    std::map<std::pair<Atom, Atom>, int> arc_labels;

    auto operator<=>(const ArcLabeledPartition&) const = default;

    std::string encode() const;
};

// Structural checks on arc-labeled partitions.
bool arcs_fully_labeled(const ArcLabeledPartition& a, int group_order);
// Ground set and partition closed under negation, mirrored arcs (i,j) and
// (-j,-i) equally labeled.
bool is_symmetric_arc_partition(const ArcLabeledPartition& a);
bool has_zero_sum_arc(const ArcLabeledPartition& a);

// Bijection between orbit-labeled partitions and arc-labeled partitions:
// each arc (i, j) is labeled by the group element carrying the value of the
// block's canonical representative at i to its value at j.
ArcLabeledPartition phi(const SpeciesHopfMonoid& orbit_monoid, const LabeledSetPartition& x);
LabeledSetPartition phi_inverse(const SpeciesHopfMonoid& orbit_monoid,
                                const ArcLabeledPartition& a);

// Bijection between partitions labeled by the connected sum of signed orbits
// and plain maps, and symmetric arc-labeled partitions of the mirrored
// ground set. Signed-orbit blocks produce mirrored block pairs split by the
// sign pattern; map blocks produce single self-mirrored blocks. The image of
// the signed-orbit summand alone is exactly the stratum with no arc (i, -i).
ArcLabeledPartition phi_pm(const SpeciesHopfMonoid& sum_monoid, const LabeledSetPartition& x);
LabeledSetPartition phi_pm_inverse(const SpeciesHopfMonoid& sum_monoid,
                                   const ArcLabeledPartition& a);

enum class ScModel { USL, UO, USp };

ScModel parse_sc_model(const std::string& s);
std::string to_string(ScModel m);

// Degree-n dimension of the superclass Hopf algebra for the tower over a
// field with q elements, counted through the labeled-partition models with
// the group of order q - 1. q must be at least 2, and odd for UO and USp.
BigInt sc_dimension(ScModel model, int n, int q);

// A bijection between the label sets of two species, given per block size by
// positions in the deterministic enumeration order.
struct LabelPairing {
    std::vector<std::vector<int>> maps;  // maps[m-1][index in A] = index in B
};

// The positional pairing (index i to index i); valid when label counts agree.
LabelPairing positional_pairing(const LabelSpecies& a, int n_max);

LabeledSetPartition map_through_pairing(const SpeciesHopfMonoid& a,
                                        const SpeciesHopfMonoid& b, const LabelPairing& pairing,
                                        const LabeledSetPartition& x);

// Checks that the induced bijection of p-basis indices intertwines the
// product and coproduct structure on all components of size <= n_max. A
// size-mismatched pairing yields a failure entry rather than a throw.
Report hopf_monoid_iso_test(const SpeciesHopfMonoid& a, const SpeciesHopfMonoid& b,
                            const LabelPairing& pairing, int n_max);

}  // namespace sphopf
