#include "doctest.h"

#include "sphopf/superclass.hpp"

#include <memory>
#include <set>

using namespace sphopf;

TEST_CASE("arcs of labeled partitions") {
    SpeciesHopfMonoid orbit(orbit_labels(cyclic_group(2)));

    // singleton blocks have no arcs, over any group
    LabeledSetPartition singles(
        GroundSet({1, 2}), {{GroundSet({1}), Label{LabelKind::Orbit, {0}}},
                            {GroundSet({2}), Label{LabelKind::Orbit, {0}}}});
    ArcLabeledPartition a = phi(orbit, singles);
    CHECK(a.arc_labels.empty());
    CHECK(arcs_fully_labeled(a, 2));

    // a pair block labeled by the orbit of (e, g) gets one arc labeled g
    LabeledSetPartition pair(GroundSet({1, 2}),
                             {{GroundSet({1, 2}), Label{LabelKind::Orbit, {0, 1}}}});
    ArcLabeledPartition b = phi(orbit, pair);
    REQUIRE(b.arc_labels.size() == 1);
    CHECK(b.arc_labels.at({1, 2}) == 1);
    CHECK(phi_inverse(orbit, b) == pair);
}

TEST_CASE("one-sided arc bijection round trips") {
    for (int order = 1; order <= 3; ++order) {
        SpeciesHopfMonoid monoid(orbit_labels(cyclic_group(order)));
        GroundSet component = GroundSet::interval(3);
        std::set<std::string> images;
        for (const auto& x : monoid.enumerate_component(component)) {
            ArcLabeledPartition a = phi(monoid, x);
            CHECK(arcs_fully_labeled(a, order));
            CHECK(phi_inverse(monoid, a) == x);
            images.insert(a.encode());
        }
        // distinct images, as many as arc labelings of all partitions
        BigInt expected = 0;
        for (const SetPartition& shape : enumerate_partitions(component)) {
            BigInt ways = 1;
            for (int i = 0; i < 3 - shape.block_count(); ++i) ways *= order;
            expected += ways;
        }
        CHECK(BigInt(images.size()) == expected);
    }
}

TEST_CASE("two-sided bijection in degree one") {
    FiniteGroup base = cyclic_group(2);
    SpeciesHopfMonoid monoid(
        connected_sum(orbit_labels(make_signed_group(base)), map_labels(base)));

    // a map block {1} with value g becomes the block {-1, 1} with one arc
    LabeledSetPartition map_block(GroundSet({1}),
                                  {{GroundSet({1}), Label{LabelKind::Sum, {1, 1}}}});
    ArcLabeledPartition a = phi_pm(monoid, map_block);
    CHECK(a.partition.encode() == "-1 1");
    REQUIRE(a.arc_labels.size() == 1);
    CHECK(a.arc_labels.at({-1, 1}) == 1);
    CHECK(has_zero_sum_arc(a));
    CHECK(is_symmetric_arc_partition(a));
    CHECK(phi_pm_inverse(monoid, a) == map_block);

    // a signed-orbit block {1} becomes two mirrored singletons with no arcs
    LabeledSetPartition orbit_block(GroundSet({1}),
                                    {{GroundSet({1}), Label{LabelKind::Sum, {0, 0}}}});
    ArcLabeledPartition b = phi_pm(monoid, orbit_block);
    CHECK(b.partition.encode() == "-1|1");
    CHECK(b.arc_labels.empty());
    CHECK_FALSE(has_zero_sum_arc(b));
    CHECK(phi_pm_inverse(monoid, b) == orbit_block);
}

TEST_CASE("two-sided bijection round trips exhaustively") {
    for (int order = 1; order <= 2; ++order) {
        FiniteGroup base = cyclic_group(order);
        SpeciesHopfMonoid monoid(
            connected_sum(orbit_labels(make_signed_group(base)), map_labels(base)));
        for (int n = 1; n <= 3; ++n) {
            std::set<std::string> images;
            for (const auto& x : monoid.enumerate_component(GroundSet::interval(n))) {
                ArcLabeledPartition a = phi_pm(monoid, x);
                CHECK(is_symmetric_arc_partition(a));
                CHECK(arcs_fully_labeled(a, order));
                CHECK(phi_pm_inverse(monoid, a) == x);
                images.insert(a.encode());
            }
            CHECK(BigInt(images.size()) ==
                  BigInt(monoid.enumerate_component(GroundSet::interval(n)).size()));
        }
    }
}

TEST_CASE("dimension formulas") {
    for (int n = 0; n <= 6; ++n) CHECK(sc_dimension(ScModel::USL, n, 2) == bell_number(n));
    CHECK(sc_dimension(ScModel::USL, 2, 3) == 3);
    for (int q : {3, 5})
        for (int n = 0; n <= 4; ++n)
            CHECK(sc_dimension(ScModel::USp, n, q) >= sc_dimension(ScModel::UO, n, q));
    CHECK_THROWS_AS(sc_dimension(ScModel::UO, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(sc_dimension(ScModel::USL, 2, 1), std::invalid_argument);
    CHECK(parse_sc_model("USp") == ScModel::USp);
    CHECK_THROWS_AS(parse_sc_model("bogus"), std::invalid_argument);
}

TEST_CASE("size-driven isomorphism test") {
    // a species against itself under the positional pairing
    SpeciesHopfMonoid a(orbit_labels(cyclic_group(2)));
    CHECK(hopf_monoid_iso_test(a, a, positional_pairing(a.labels(), 3), 3).ok());

    // order 2 against the signed double of the trivial group
    SpeciesHopfMonoid b(orbit_labels(make_signed_group(cyclic_group(1))));
    CHECK(hopf_monoid_iso_test(a, b, positional_pairing(a.labels(), 3), 3).ok());

    // order 4 against the signed double of order 2 (not isomorphic as groups)
    SpeciesHopfMonoid z4(orbit_labels(cyclic_group(4)));
    SpeciesHopfMonoid signed_z2(orbit_labels(make_signed_group(cyclic_group(2))));
    CHECK(hopf_monoid_iso_test(z4, signed_z2, positional_pairing(z4.labels(), 2), 2).ok());

    // a wrong-size pairing is reported, not thrown
    Report bad = hopf_monoid_iso_test(a, signed_z2, positional_pairing(a.labels(), 2), 2);
    CHECK_FALSE(bad.ok());
}
