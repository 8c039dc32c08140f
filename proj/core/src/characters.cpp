#include "sphopf/characters.hpp"

#include <stdexcept>

namespace sphopf {

Character::Character(std::shared_ptr<const SpeciesHopfMonoid> host, std::string name,
                     std::function<Rational(const LabeledSetPartition&)> on_p_index)
    : host_(std::move(host)), name_(std::move(name)), on_p_(std::move(on_p_index)) {
    if (!host_ || !on_p_) throw std::invalid_argument("Character: missing host or values");
}

Rational Character::eval(const Element& x) const {
    const Element p = host_->convert(x, Basis::P);
    Rational sum = 0;
    for (const auto& [t, c] : p.terms()) sum += c * on_p_(t);
    return sum;
}

Character unit_character(std::shared_ptr<const SpeciesHopfMonoid> host) {
    std::string name = "unit character on " + host->labels().name();
    return Character(std::move(host), std::move(name),
                     [](const LabeledSetPartition&) { return Rational(1); });
}

Rational zeta_component(const Character& zeta, const SetPartition& split, const Element& x) {
    if (split.ground() != x.component())
        throw std::invalid_argument("zeta_component: partition must cover the component");
    const SpeciesHopfMonoid& host = zeta.host();
    MultiTensor t = host.delta_multi(x, std::vector<GroundSet>(split.blocks().begin(),
                                                               split.blocks().end()));
    Rational sum = 0;
    for (const auto& [factors, c] : t.terms) {
        Rational prod = c;
        for (std::size_t i = 0; i < factors.size(); ++i)
            prod *= zeta.eval(Element::of(factors[i], Basis::Natural));
        sum += prod;
    }
    return sum;
}

Element terminal_psi(const Character& zeta, const SpeciesHopfMonoid& target_pi,
                     const Element& x) {
    if (target_pi.labels().kind() != LabelKind::Trivial)
        throw std::invalid_argument("terminal_psi: target must be the trivially labeled engine");
    Element out(x.component(), Basis::M);
    for (const SetPartition& split : enumerate_partitions(x.component())) {
        Rational value = zeta_component(zeta, split, x);
        if (!value.is_zero()) out.add_term(with_trivial_labels(split), value);
    }
    return out;
}

}  // namespace sphopf
