#pragma once

#include "sphopf/engine.hpp"

#include <functional>
#include <memory>
#include <string>

namespace sphopf {

// A monoid-morphism character on a Hopf monoid, specified by its values on
// the p-basis (both canonical examples take the value 1 there). Evaluation on
// any element converts to the p-basis first.
class Character {
public:
    Character(std::shared_ptr<const SpeciesHopfMonoid> host, std::string name,
              std::function<Rational(const LabeledSetPartition&)> on_p_index);

    const SpeciesHopfMonoid& host() const { return *host_; }
    std::shared_ptr<const SpeciesHopfMonoid> host_ptr() const { return host_; }
    const std::string& name() const { return name_; }

    Rational on_p_index(const LabeledSetPartition& x) const { return on_p_(x); }
    Rational eval(const Element& x) const;

private:
    std::shared_ptr<const SpeciesHopfMonoid> host_;
    std::string name_;
    std::function<Rational(const LabeledSetPartition&)> on_p_;
};

// The character taking the value 1 on every p-basis index; on the partition
// monoid this is the canonical terminal-object character.
Character unit_character(std::shared_ptr<const SpeciesHopfMonoid> host);

// Splits x along the blocks of the partition and multiplies the per-block
// character values. Independent of block order for cocommutative hosts.
Rational zeta_component(const Character& zeta, const SetPartition& split, const Element& x);

// The canonical morphism into the partition monoid: sum over all partitions
// of the component of zeta_component times the monomial basis element. The
// result is an m-basis element of the trivially labeled engine.
Element terminal_psi(const Character& zeta, const SpeciesHopfMonoid& target_pi,
                     const Element& x);

}  // namespace sphopf
