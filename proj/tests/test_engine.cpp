#include "doctest.h"

#include "sphopf/engine.hpp"

#include <memory>
#include <random>

using namespace sphopf;

namespace {

Element random_element(const SpeciesHopfMonoid& monoid, const GroundSet& component,
                       Basis basis, std::mt19937& rng) {
    auto all = monoid.enumerate_component(component);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(all.size()) - 1);
    Element out(component, basis);
    for (int t = 0; t < 4; ++t) out.add_term(all[pick(rng)], coeff(rng));
    return out;
}

}  // namespace

TEST_CASE("product basics") {
    SpeciesHopfMonoid pi(trivial_labels());
    Element unit = Element::unit();
    GroundSet g({1});
    Element x = Element::of(with_trivial_labels(SetPartition::one_block(g)), Basis::Natural);
    CHECK(pi.nabla(unit, x) == x);
    CHECK(pi.nabla(x, unit) == x);

    Element y = Element::of(with_trivial_labels(SetPartition::one_block(GroundSet({2}))), Basis::Natural);
    Element xy = pi.nabla(x, y);
    REQUIRE(xy.terms().size() == 1);
    CHECK(xy.terms().begin()->first.shape().encode() == "1|2");
    CHECK_THROWS_AS(pi.nabla(x, x), std::invalid_argument);

    // commutativity
    std::mt19937 rng(7);
    GroundSet s({1, 3});
    GroundSet t({2, 5});
    Element a = random_element(pi, s, Basis::Natural, rng);
    Element b = random_element(pi, t, Basis::Natural, rng);
    CHECK(pi.nabla(a, b) == pi.nabla(b, a));
}

TEST_CASE("coproduct basics") {
    SpeciesHopfMonoid pi(trivial_labels());
    GroundSet g({1, 2});
    Element z = Element::of(with_trivial_labels(SetPartition::one_block(g)), Basis::Natural);

    TensorElement counit = pi.delta(z, g, GroundSet{});
    REQUIRE(counit.terms.size() == 1);
    CHECK(counit.terms.begin()->first.first == with_trivial_labels(SetPartition::one_block(g)));
    CHECK(counit.terms.begin()->first.second == LabeledSetPartition{});

    TensorElement split = pi.delta(z, GroundSet({1}), GroundSet({2}));
    REQUIRE(split.terms.size() == 1);
    CHECK(split.terms.begin()->first.first.shape().encode() == "1");
    CHECK(split.terms.begin()->first.second.shape().encode() == "2");

    // block splitting with first-return labels
    SpeciesHopfMonoid perms(cyclic_labels());
    GroundSet g4({1, 2, 3, 4});
    LabeledSetPartition cycle(g4, {{g4, Label{LabelKind::Cyclic, {1, 4, 2, 3}}}});
    auto [l, r] = perms.split(cycle, GroundSet({1, 2, 3}), GroundSet({4}));
    REQUIRE(l.block_count() == 1);
    CHECK(l.blocks()[0].second.payload == std::vector<int>({1, 2, 3}));
    CHECK(r.blocks()[0].second.payload == std::vector<int>({4}));
}

TEST_CASE("iterated operations agree with any nesting") {
    SpeciesHopfMonoid orbit(orbit_labels(cyclic_group(2)));
    std::mt19937 rng(99);

    // identity when there is a single part
    GroundSet g({1, 2, 3});
    Element x = random_element(orbit, g, Basis::Natural, rng);
    MultiTensor one = orbit.delta_multi(x, {g});
    Element back(g, Basis::Natural);
    for (const auto& [factors, c] : one.terms) back.add_term(factors[0], c);
    CHECK(back == x);
    CHECK(orbit.nabla_multi({x}) == x);

    // two parts reduce to the plain coproduct
    GroundSet s({1, 3});
    GroundSet t({2});
    MultiTensor two = orbit.delta_multi(x, {s, t});
    TensorElement flat = orbit.delta(x, s, t);
    CHECK(two.terms.size() == flat.terms.size());
    for (const auto& [factors, c] : two.terms)
        CHECK(flat.terms.at({factors[0], factors[1]}) == c);

    // left-nested and right-nested products agree on random inputs
    for (int trial = 0; trial < 10; ++trial) {
        Element a = random_element(orbit, GroundSet({1, 4}), Basis::Natural, rng);
        Element b = random_element(orbit, GroundSet({2}), Basis::Natural, rng);
        Element c = random_element(orbit, GroundSet({3, 5}), Basis::Natural, rng);
        CHECK(orbit.nabla(orbit.nabla(a, b), c) == orbit.nabla(a, orbit.nabla(b, c)));
        CHECK(orbit.nabla_multi({a, b, c}) == orbit.nabla(a, orbit.nabla(b, c)));
    }

    // iterated coproduct peeled in either association
    GroundSet parts[] = {GroundSet({2}), GroundSet({1, 5}), GroundSet({3})};
    Element z = random_element(orbit, GroundSet({1, 2, 3, 5}), Basis::Natural, rng);
    MultiTensor left = orbit.delta_multi(z, {parts[0], parts[1], parts[2]});
    // right-nested: split off the tail first
    std::map<std::vector<LabeledSetPartition>, Rational> expected;
    TensorElement head = orbit.delta(z, parts[0].set_union(parts[1]), parts[2]);
    for (const auto& [pair, c] : head.terms) {
        TensorElement inner =
            orbit.delta(Element::of(pair.first, Basis::Natural), parts[0], parts[1]);
        for (const auto& [pair2, c2] : inner.terms)
            expected[{pair2.first, pair2.second, pair.second}] += c * c2;
    }
    CHECK(left.terms == expected);
}

TEST_CASE("order on labeled partitions") {
    SpeciesHopfMonoid pi(trivial_labels());
    GroundSet g3({1, 2, 3});

    // with trivial labels the order is refinement of shapes
    for (int n = 1; n <= 4; ++n) {
        auto shapes = enumerate_partitions(GroundSet::interval(n));
        for (const auto& a : shapes)
            for (const auto& b : shapes)
                CHECK(pi.order_leq(with_trivial_labels(a), with_trivial_labels(b)) ==
                      refines(a, b));
    }

    // reflexivity and the component check
    SpeciesHopfMonoid perms(cyclic_labels());
    GroundSet g4({1, 2, 3, 4});
    LabeledSetPartition two_cycles(
        g4, {{GroundSet({1, 2}), Label{LabelKind::Cyclic, {1, 2}}},
             {GroundSet({3, 4}), Label{LabelKind::Cyclic, {3, 4}}}});
    LabeledSetPartition shuffle(g4, {{g4, Label{LabelKind::Cyclic, {1, 3, 2, 4}}}});
    CHECK(perms.order_leq(two_cycles, two_cycles));
    CHECK(perms.order_leq(two_cycles, shuffle));
    CHECK_FALSE(perms.order_leq(shuffle, two_cycles));
    CHECK_THROWS_AS(
        perms.order_leq(two_cycles,
                        LabeledSetPartition(g3, {{g3, Label{LabelKind::Cyclic, {1, 2, 3}}}})),
        std::invalid_argument);

    // a label mismatch below a single block
    SpeciesHopfMonoid orbit(orbit_labels(cyclic_group(2)));
    LabeledSetPartition top(g3, {{g3, Label{LabelKind::Orbit, {0, 1, 0}}}});
    LabeledSetPartition good(
        g3, {{GroundSet({1, 2}), Label{LabelKind::Orbit, {0, 1}}},
             {GroundSet({3}), Label{LabelKind::Orbit, {0}}}});
    LabeledSetPartition bad(
        g3, {{GroundSet({1, 2}), Label{LabelKind::Orbit, {0, 0}}},
             {GroundSet({3}), Label{LabelKind::Orbit, {0}}}});
    CHECK(orbit.order_leq(good, top));
    CHECK_FALSE(orbit.order_leq(bad, top));
}

TEST_CASE("component posets") {
    SpeciesHopfMonoid pi(trivial_labels());
    auto cp = pi.component_poset(GroundSet({1, 2, 3}));
    CHECK(cp->size() == 5);
    for (int i = 0; i < cp->size(); ++i)
        for (int j = 0; j < cp->size(); ++j)
            CHECK(cp->leq(i, j) ==
                  refines(cp->element(i).shape(), cp->element(j).shape()));

    CHECK(pi.component_poset(GroundSet{})->size() == 1);

    SpeciesHopfMonoid orbit(orbit_labels(cyclic_group(2)));
    CHECK(orbit.component_poset(GroundSet({1, 2}))->size() == 3);

    // the guard refuses oversized components but can be widened
    CHECK_THROWS_AS(orbit.component_poset(GroundSet::interval(6)), GuardError);
    SpeciesHopfMonoid wide(orbit_labels(cyclic_group(2)), SizeGuard{6, 6});
    CHECK(wide.guard_limit() == 6);
}

TEST_CASE("closed-form moebius values") {
    SpeciesHopfMonoid pi(trivial_labels());
    GroundSet g({1, 2, 3});
    CHECK(pi.mobius_closed_form(with_trivial_labels(SetPartition::singletons(g))) == 1);
    CHECK(pi.mobius_closed_form(with_trivial_labels(SetPartition::one_block(g))) == 2);
    GroundSet g4({1, 2, 3, 4});
    SetPartition pairs(g4, {GroundSet({1, 2}), GroundSet({3, 4})});
    CHECK(pi.mobius_closed_form(with_trivial_labels(pairs)) == 1);

    // against the recursive value over the interval
    auto cp = pi.component_poset(g4);
    for (int i = 0; i < cp->size(); ++i) {
        const auto& x = cp->element(i);
        CHECK(pi.mobius_closed_form(x) ==
              cp->mobius(cp->index_of(pi.minimum_below(x)), i));
    }
}

TEST_CASE("minimum below an element") {
    SpeciesHopfMonoid orbit(orbit_labels(cyclic_group(2)));
    GroundSet g({1, 2, 3});
    LabeledSetPartition x(g, {{g, Label{LabelKind::Orbit, {0, 1, 0}}}});
    LabeledSetPartition bottom = orbit.minimum_below(x);
    CHECK(bottom.block_count() == 3);
    for (const auto& [b, lab] : bottom.blocks())
        CHECK(lab.payload == std::vector<int>({0}));
    CHECK(orbit.order_leq(bottom, x));
}

TEST_CASE("basis conversions") {
    SpeciesHopfMonoid pi(trivial_labels());

    // on a singleton component every basis looks the same
    GroundSet g1({1});
    LabeledSetPartition point = with_trivial_labels(SetPartition::one_block(g1));
    for (Basis b : {Basis::M, Basis::P, Basis::E, Basis::H}) {
        Element converted = pi.convert(Element::of(point, b), Basis::Natural);
        REQUIRE(converted.terms().size() == 1);
        CHECK(converted.coeff(point) == Rational(1));
    }

    // p of a single block on two atoms
    GroundSet g2({1, 2});
    Element p = pi.convert(
        Element::of(with_trivial_labels(SetPartition::one_block(g2)), Basis::P),
        Basis::Natural);
    CHECK(p.coeff(with_trivial_labels(SetPartition::one_block(g2))) == Rational(1));
    CHECK(p.coeff(with_trivial_labels(SetPartition::singletons(g2))) == Rational(-1));
    CHECK(p.terms().size() == 2);

    // natural elements expand over their lower interval with unit coefficients
    GroundSet g3({1, 2, 3});
    auto cp = pi.component_poset(g3);
    for (int i = 0; i < cp->size(); ++i) {
        Element in_p = pi.convert(Element::of(cp->element(i), Basis::Natural), Basis::P);
        for (int j = 0; j < cp->size(); ++j)
            CHECK(in_p.coeff(cp->element(j)) == Rational(cp->leq(j, i) ? 1 : 0));
        Element in_m = pi.convert(Element::of(cp->element(i), Basis::P), Basis::M);
        for (int j = 0; j < cp->size(); ++j)
            CHECK(in_m.coeff(cp->element(j)) == Rational(cp->leq(i, j) ? 1 : 0));
    }

    // random round trips through every basis pair
    std::mt19937 rng(2024);
    std::vector<std::shared_ptr<SpeciesHopfMonoid>> monoids = {
        std::make_shared<SpeciesHopfMonoid>(trivial_labels()),
        std::make_shared<SpeciesHopfMonoid>(orbit_labels(cyclic_group(2))),
        std::make_shared<SpeciesHopfMonoid>(cyclic_labels()),
    };
    const Basis bases[] = {Basis::Natural, Basis::M, Basis::P, Basis::E, Basis::H};
    for (const auto& monoid : monoids) {
        GroundSet component = GroundSet::interval(monoid->labels().kind() == LabelKind::Trivial
                                                      ? 4
                                                      : 3);
        for (int trial = 0; trial < 5; ++trial)
            for (Basis from : bases) {
                Element x = random_element(*monoid, component, from, rng);
                for (Basis to : bases)
                    CHECK(monoid->convert(monoid->convert(x, to), from) == x);
            }
    }
}

TEST_CASE("structure rules, spot checks") {
    SpeciesHopfMonoid pi(trivial_labels());
    GroundSet s({1});
    GroundSet t({2});
    LabeledSetPartition a = with_trivial_labels(SetPartition::one_block(s));
    LabeledSetPartition b = with_trivial_labels(SetPartition::one_block(t));

    Element pp = pi.structure_product(Basis::P, a, b);
    REQUIRE(pp.terms().size() == 1);
    CHECK(pp.terms().begin()->first == pi.merge(a, b));

    GroundSet g2({1, 2});
    LabeledSetPartition block = with_trivial_labels(SetPartition::one_block(g2));
    TensorElement zero = pi.structure_coproduct(Basis::M, block, s, t);
    CHECK(zero.terms.empty());
    TensorElement ee = pi.structure_coproduct(Basis::E, block, s, t);
    CHECK(ee.terms.size() == 1);

    // m-product sums over partitions with the two prescribed restrictions
    Element mm = pi.structure_product(Basis::M, a, b);
    CHECK(mm.terms().size() == 2);

    // shape and moebius multiplicativity under merge
    SpeciesHopfMonoid orbit(orbit_labels(cyclic_group(2)));
    for (const auto& x : orbit.enumerate_component(GroundSet({1, 3})))
        for (const auto& y : orbit.enumerate_component(GroundSet({2, 4}))) {
            LabeledSetPartition m = orbit.merge(x, y);
            CHECK(m.shape() == x.shape().merged_with(y.shape()));
            CHECK(orbit.mobius_closed_form(m) ==
                  orbit.mobius_closed_form(x) * orbit.mobius_closed_form(y));
        }
}

TEST_CASE("hopf axioms on small components") {
    SpeciesHopfMonoid pi(trivial_labels());
    CHECK(pi.verify_hopf_axioms(GroundSet({1, 2, 3})).ok());
    CHECK(pi.verify_hopf_axioms(GroundSet{}).ok());
    SpeciesHopfMonoid perms(cyclic_labels());
    CHECK(perms.verify_hopf_axioms(GroundSet({1, 2, 3})).ok());
}
