#pragma once

#include "sphopf/ground.hpp"
#include "sphopf/group.hpp"
#include "sphopf/rational.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sphopf {

enum class LabelKind : std::uint8_t { Trivial, Map, Orbit, Cyclic, Sum };

// A block label. The payload is species-specific canonical data:
//   Trivial - empty
//   Map     - group-element indices aligned with the sorted block atoms
//   Orbit   - same, normalized so the value at the minimum atom is the identity
//   Cyclic  - the block atoms listed in cyclic order, rotated to start at the
//             minimum atom
//   Sum     - payload[0] is the summand (0 or 1) followed by the inner payload
// Two labels are equal exactly when their payloads (and kinds) are equal.
struct Label {
    LabelKind kind = LabelKind::Trivial;
    std::vector<int> payload;

    auto operator<=>(const Label&) const = default;
};

// A finite set species with relabeling and restriction: the coproduct
// Delta_{S,T}(lab) = restrict(lab, S) (x) restrict(lab, T) makes its
// linearization a cocommutative connected comonoid. Required laws, all
// covered by tests: relabeling is functorial, restriction to the full block
// is the identity, nested restrictions compose, and restriction commutes
// with relabeling. Labels live on nonempty blocks only.
class LabelSpecies {
public:
    virtual ~LabelSpecies() = default;

    virtual std::string name() const = 0;
    virtual LabelKind kind() const = 0;

    // All labels on a nonempty block, in a fixed deterministic order that is
    // stable under order-preserving relabeling of the block.
    virtual std::vector<Label> enumerate(const GroundSet& block) const = 0;

    // Number of labels on a block of the given size.
    virtual BigInt count(int block_size) const = 0;

    // Canonical label on sub (nonempty subset of block).
    virtual Label restrict(const Label& lab, const GroundSet& block,
                           const GroundSet& sub) const = 0;

    // Transport along a bijection whose domain is the block.
    virtual Label relabel(const Bijection& sigma, const Label& lab,
                          const GroundSet& block) const = 0;

    // Text form used by the CLI output formats.
    virtual std::string encode(const Label& lab, const GroundSet& block) const = 0;
};

using LabelSpeciesPtr = std::shared_ptr<const LabelSpecies>;

LabelSpeciesPtr trivial_labels();
LabelSpeciesPtr map_labels(FiniteGroup g);
LabelSpeciesPtr orbit_labels(FiniteGroup g);
LabelSpeciesPtr cyclic_labels();
LabelSpeciesPtr connected_sum(LabelSpeciesPtr first, LabelSpeciesPtr second);

// Parses CLI species selectors: "trivial", "cyclic", "map:N", "orbit:N",
// "signed-orbit:N" (orbit labels over the signed group of Z_N), and
// "sum:<a>+<b>". A selector without an explicit ":N" uses default_group_order.
LabelSpeciesPtr parse_species(const std::string& selector, int default_group_order = 2);

// The group a map/orbit species is built over; throws for other kinds.
const FiniteGroup& species_group(const LabelSpecies& species);
// Summands of a connected sum; throws for other kinds.
std::pair<LabelSpeciesPtr, LabelSpeciesPtr> species_summands(const LabelSpecies& species);

}  // namespace sphopf
