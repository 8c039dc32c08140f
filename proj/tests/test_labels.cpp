#include "doctest.h"

#include "sphopf/labels.hpp"

#include <random>
#include <set>

using namespace sphopf;

namespace {

std::vector<LabelSpeciesPtr> all_instances() {
    return {
        trivial_labels(),
        map_labels(cyclic_group(2)),
        map_labels(cyclic_group(3)),
        orbit_labels(cyclic_group(2)),
        orbit_labels(cyclic_group(3)),
        orbit_labels(make_signed_group(cyclic_group(1))),
        cyclic_labels(),
        connected_sum(orbit_labels(make_signed_group(cyclic_group(1))),
                      map_labels(cyclic_group(1))),
    };
}

std::vector<GroundSet> nonempty_subsets(const GroundSet& base) {
    std::vector<GroundSet> out;
    const auto& atoms = base.atoms();
    for (unsigned mask = 1; mask < (1u << atoms.size()); ++mask) {
        std::vector<Atom> sub;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if ((mask >> i) & 1) sub.push_back(atoms[i]);
        out.emplace_back(std::move(sub));
    }
    return out;
}

Bijection random_bijection(const GroundSet& from, const GroundSet& to, std::mt19937& rng) {
    std::vector<Atom> images = to.atoms();
    std::shuffle(images.begin(), images.end(), rng);
    return Bijection(from, to, images);
}

}  // namespace

TEST_CASE("group tables") {
    FiniteGroup z3 = cyclic_group(3);
    CHECK(z3.order() == 3);
    CHECK(z3.mul(1, 2) == 0);
    CHECK(z3.inv(1) == 2);

    FiniteGroup s2 = make_signed_group(cyclic_group(1));
    CHECK(s2.order() == 2);
    CHECK(s2.mul(1, 1) == 0);

    FiniteGroup signed_z2 = make_signed_group(cyclic_group(2));
    CHECK(signed_z2.order() == 4);
    // (-g)(+h) = -gh: with g = h = the generator (index 1), -g = 3, gh = 0, -gh = 2
    CHECK(signed_z2.mul(3, 1) == 2);
    CHECK(signed_z2.mul(3, 3) == 0);
    CHECK(signed_z2.mul(1, 3) == 2);
    CHECK(FiniteGroup::identity == 0);

    CHECK_THROWS_AS(FiniteGroup("bad", {{0, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("label counts match the closed forms") {
    for (const auto& species : all_instances()) {
        for (int m = 1; m <= 5; ++m) {
            GroundSet block = GroundSet::interval(m);
            auto labels = species->enumerate(block);
            CHECK(BigInt(labels.size()) == species->count(m));
            std::set<Label> distinct(labels.begin(), labels.end());
            CHECK(distinct.size() == labels.size());
        }
        CHECK_THROWS_AS(species->enumerate(GroundSet{}), std::invalid_argument);
    }
    CHECK(trivial_labels()->enumerate(GroundSet({1, 2})).size() == 1);
    CHECK(orbit_labels(cyclic_group(2))->enumerate(GroundSet({1, 2})).size() == 2);
    CHECK(cyclic_labels()->enumerate(GroundSet({1, 2, 3})).size() == 2);
    CHECK(map_labels(cyclic_group(3))->count(4) == 81);
    CHECK(cyclic_labels()->count(5) == 24);
}

TEST_CASE("restriction examples") {
    auto trivial = trivial_labels();
    GroundSet b123({1, 2, 3});
    Label t = trivial->enumerate(b123).front();
    CHECK(trivial->restrict(t, b123, GroundSet({1, 3})) == t);

    auto orbit = orbit_labels(cyclic_group(2));
    Label f{LabelKind::Orbit, {0, 1, 0}};  // (e, g, e)
    Label restricted = orbit->restrict(f, b123, GroundSet({2, 3}));
    CHECK(restricted.payload == std::vector<int>({0, 1}));  // canonical (e, g)

    auto cyclic = cyclic_labels();
    GroundSet b1234({1, 2, 3, 4});
    Label cyc{LabelKind::Cyclic, {1, 4, 2, 3}};
    CHECK(cyclic->restrict(cyc, b1234, GroundSet({1, 2, 3})).payload ==
          std::vector<int>({1, 2, 3}));
    CHECK(cyclic->restrict(cyc, b1234, GroundSet({2, 4})).payload ==
          std::vector<int>({2, 4}));
    CHECK_THROWS_AS(orbit->restrict(f, b123, GroundSet{}), std::invalid_argument);
}

TEST_CASE("relabeling examples") {
    auto cyclic = cyclic_labels();
    GroundSet b({1, 2, 3});
    Label cyc{LabelKind::Cyclic, {1, 2, 3}};
    Bijection sigma(b, GroundSet({5, 6, 7}), {5, 7, 6});
    CHECK(cyclic->relabel(sigma, cyc, b).payload == std::vector<int>({5, 7, 6}));
    CHECK(cyclic->relabel(Bijection::identity(b), cyc, b) == cyc);

    auto maps = map_labels(cyclic_group(3));
    Label f{LabelKind::Map, {0, 1, 2}};
    // f maps 1,2,3 to e,g,g^2; after relabeling along sigma the value at
    // sigma(x) must be f(x)
    Label g = maps->relabel(sigma, f, b);
    GroundSet target({5, 6, 7});
    CHECK(g.payload[target.position_of(5)] == 0);
    CHECK(g.payload[target.position_of(7)] == 1);
    CHECK(g.payload[target.position_of(6)] == 2);
}

TEST_CASE("species contract laws, exhaustively on small blocks") {
    std::mt19937 rng(20240817);
    std::vector<GroundSet> bases = {GroundSet({1, 2, 3, 5}), GroundSet({-2, 1, 3})};
    for (const auto& species : all_instances()) {
        for (const auto& base : bases)
            for (const GroundSet& block : nonempty_subsets(base)) {
                if (block.size() > 4) continue;
                for (const Label& lab : species->enumerate(block)) {
                    // full restriction is the identity
                    CHECK(species->restrict(lab, block, block) == lab);
                    // nested restrictions compose
                    for (const GroundSet& mid : nonempty_subsets(block))
                        for (const GroundSet& inner : nonempty_subsets(mid))
                            CHECK(species->restrict(species->restrict(lab, block, mid), mid,
                                                    inner) ==
                                  species->restrict(lab, block, inner));
                    // functoriality
                    CHECK(species->relabel(Bijection::identity(block), lab, block) == lab);
                    GroundSet mid_target = GroundSet::interval(block.size());
                    GroundSet far_target({10, 20, 30, 40});
                    std::vector<Atom> far(far_target.atoms().begin(),
                                          far_target.atoms().begin() + block.size());
                    Bijection first = random_bijection(block, mid_target, rng);
                    Bijection second = random_bijection(mid_target, GroundSet(far), rng);
                    CHECK(species->relabel(second.compose(first), lab, block) ==
                          species->relabel(second, species->relabel(first, lab, block),
                                           mid_target));
                    // restriction commutes with relabeling
                    for (const GroundSet& sub : nonempty_subsets(block)) {
                        Bijection restricted(sub, first.image(sub), [&] {
                            std::vector<Atom> im;
                            for (Atom a : sub) im.push_back(first(a));
                            return im;
                        }());
                        CHECK(species->relabel(restricted,
                                               species->restrict(lab, block, sub), sub) ==
                              species->restrict(species->relabel(first, lab, block),
                                                mid_target, first.image(sub)));
                    }
                }
            }
    }
}

TEST_CASE("orbit canonicalization is a transversal") {
    for (int order : {2, 3}) {
        FiniteGroup g = cyclic_group(order);
        auto orbit = orbit_labels(g);
        auto maps = map_labels(g);
        for (const GroundSet& block :
             {GroundSet({1, 2}), GroundSet({1, 2, 3}), GroundSet({2, 5, 7})}) {
            std::set<Label> canonical;
            for (const Label& raw : maps->enumerate(block)) {
                int hits = 0;
                for (int t = 0; t < order; ++t) {
                    std::vector<int> translated;
                    for (int v : raw.payload) translated.push_back(g.mul(t, v));
                    if (translated.front() == FiniteGroup::identity) {
                        ++hits;
                        canonical.insert(Label{LabelKind::Orbit, translated});
                    }
                }
                CHECK(hits == 1);
            }
            auto enumerated = orbit->enumerate(block);
            CHECK(canonical == std::set<Label>(enumerated.begin(), enumerated.end()));

            // canonicalize-then-restrict equals restrict-then-canonicalize
            for (const Label& raw : maps->enumerate(block))
                for (const GroundSet& sub : nonempty_subsets(block)) {
                    int t = g.inv(raw.payload.front());
                    std::vector<int> canon;
                    for (int v : raw.payload) canon.push_back(g.mul(t, v));
                    Label canon_restricted = orbit->restrict(
                        Label{LabelKind::Orbit, canon}, block, sub);
                    Label raw_restricted = maps->restrict(raw, block, sub);
                    int t2 = g.inv(raw_restricted.payload.front());
                    std::vector<int> expect;
                    for (int v : raw_restricted.payload) expect.push_back(g.mul(t2, v));
                    CHECK(canon_restricted.payload == expect);
                }
        }
    }
}

TEST_CASE("cyclic restriction is transitive") {
    auto cyclic = cyclic_labels();
    GroundSet block({1, 2, 3, 4, 5});
    for (const Label& lab : cyclic->enumerate(block))
        for (const GroundSet& mid : nonempty_subsets(block))
            for (const GroundSet& inner : nonempty_subsets(mid))
                CHECK(cyclic->restrict(cyclic->restrict(lab, block, mid), mid, inner) ==
                      cyclic->restrict(lab, block, inner));
}

TEST_CASE("species selectors parse") {
    CHECK(parse_species("trivial")->name() == "trivial");
    CHECK(parse_species("cyclic")->name() == "cyclic");
    CHECK(parse_species("orbit:3")->name() == "orbit:Z3");
    CHECK(parse_species("map:2")->name() == "map:Z2");
    CHECK(parse_species("signed-orbit:2")->name() == "orbit:signed(Z2)");
    CHECK(parse_species("sum:signed-orbit:1+map:1")->name() ==
          "sum(orbit:signed(Z1),map:Z1)");
    CHECK(parse_species("orbit", 3)->name() == "orbit:Z3");
    CHECK_THROWS_AS(parse_species("nope"), std::invalid_argument);
}

TEST_CASE("label encodings") {
    auto orbit = orbit_labels(cyclic_group(2));
    GroundSet b({1, 2});
    CHECK(orbit->encode(Label{LabelKind::Orbit, {0, 1}}, b) == "0,1");
    CHECK(trivial_labels()->encode(Label{}, b) == "·");
    CHECK(cyclic_labels()->encode(Label{LabelKind::Cyclic, {1, 4, 2, 3}},
                                  GroundSet({1, 2, 3, 4})) == "(1 4 2 3)");
    auto sum = connected_sum(orbit_labels(make_signed_group(cyclic_group(1))),
                             map_labels(cyclic_group(1)));
    CHECK(sum->encode(Label{LabelKind::Sum, {1, 0, 0}}, b) == "b:0,0");
}
