#include "doctest.h"

#include "sphopf/classfun.hpp"
#include "sphopf/engine.hpp"

#include <map>
#include <memory>

using namespace sphopf;

TEST_CASE("permutations") {
    Permutation s({2, 3, 1, 4});
    CHECK(s.degree() == 4);
    CHECK(s(1) == 2);
    CHECK(s.inverse()(2) == 1);
    CHECK(s.cycle_type() == IntegerPartition({3, 1}));
    CHECK(s.cycles() == std::vector<std::vector<int>>({{1, 2, 3}, {4}}));
    CHECK(s.compose(s.inverse()) == Permutation::identity(4));
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);

    auto all = Permutation::all(3);
    CHECK(all.size() == 6);
    for (std::size_t i = 0; i < all.size(); ++i)
        CHECK(all[i].lex_rank() == static_cast<long long>(i));

    Permutation a({2, 1});
    Permutation b({1, 3, 2});
    Permutation ab = Permutation::embed_product(a, b);
    CHECK(ab.images() == std::vector<int>({2, 1, 3, 5, 4}));
    CHECK(ab.stabilizes_prefix(2));
    auto [back_a, back_b] = ab.split_prefix(2);
    CHECK(back_a == a);
    CHECK(back_b == b);
    CHECK_FALSE(Permutation({3, 2, 1}).stabilizes_prefix(2));
}

TEST_CASE("group functions") {
    GroupFunction f = GroupFunction::indicator(Permutation({2, 1}));
    CHECK(f.value(Permutation({2, 1})) == Rational(1));
    CHECK(f.value(Permutation({1, 2})) == Rational(0));
    CHECK(f.is_class_function());  // only one transposition in degree two
    CHECK(GroupFunction::trivial_character(3).is_class_function());
    CHECK(GroupFunction::sign_character(3).value(Permutation({2, 1, 3})) == Rational(-1));
    GroupFunction g = GroupFunction::indicator(Permutation({2, 3, 1}));
    CHECK_FALSE(g.is_class_function());

    ClassFunction c = ClassFunction::from_function(GroupFunction::sign_character(3));
    CHECK(c.value(IntegerPartition({2, 1})) == Rational(-1));
    CHECK(c.densify() == GroupFunction::sign_character(3));
    CHECK_THROWS_AS(ClassFunction::from_function(g), std::invalid_argument);
}

TEST_CASE("products, restrictions, averaging") {
    // degree-zero unit leaves functions alone
    GroupFunction unit(0);
    unit.set_value(Permutation::identity(0), 1);
    GroupFunction f = GroupFunction::indicator(Permutation({2, 1}));
    CHECK(fun_product(unit, f) == f);
    CHECK(fun_product(f, unit) == f);

    // restriction tensors at the ends
    auto tensors = fun_coproduct(f);
    REQUIRE(tensors.size() == 3);
    CHECK(tensors[0].terms.at({Permutation::identity(0), Permutation({2, 1})}) ==
          Rational(1));
    CHECK(tensors[2].terms.at({Permutation({2, 1}), Permutation::identity(0)}) ==
          Rational(1));
    // the transposition leaves the embedded product subgroup
    CHECK(tensors[1].terms.empty());

    // restrictions of class functions stay class-wise constant
    for (int n = 2; n <= 4; ++n)
        for (const auto& lambda : integer_partitions(n))
            for (const auto& t : fun_coproduct(
                     ClassFunction::indicator(n, lambda).densify())) {
                std::map<std::pair<IntegerPartition, IntegerPartition>, Rational> seen;
                for (const auto& [pair, v] : t.terms) {
                    auto key = std::make_pair(pair.first.cycle_type(),
                                              pair.second.cycle_type());
                    auto [it, inserted] = seen.emplace(key, v);
                    if (!inserted) CHECK(it->second == v);
                }
            }

    // averaging examples
    GroupFunction avg_id = average_conjugation(GroupFunction::indicator(Permutation({1, 2})));
    CHECK(ClassFunction::from_function(avg_id) ==
          Rational(2) * ClassFunction::indicator(2, IntegerPartition({1, 1})));
    GroupFunction avg_swap =
        average_conjugation(GroupFunction::indicator(Permutation({2, 1})));
    CHECK(ClassFunction::from_function(avg_swap) ==
          Rational(2) * ClassFunction::indicator(2, IntegerPartition({2})));
    for (int n = 1; n <= 4; ++n) {
        GroupFunction triv = GroupFunction::trivial_character(n);
        CHECK(average_conjugation(triv) == Rational(factorial(n)) * triv);
    }
}

TEST_CASE("induction") {
    // inducing along the identity embedding changes nothing
    GroupFunction unit(0);
    unit.set_value(Permutation::identity(0), 1);
    GroupFunction g = GroupFunction::sign_character(2);
    CHECK(induce_product(unit, g) == g);
    CHECK(induce_product(g, unit) == g);

    // indicator class functions induce with centralizer ratios
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; m + n <= 4; ++n)
            for (const auto& alpha : integer_partitions(m))
                for (const auto& beta : integer_partitions(n)) {
                    ClassFunction lhs = induce_class(ClassFunction::indicator(m, alpha),
                                                     ClassFunction::indicator(n, beta));
                    IntegerPartition lambda = alpha.merged_with(beta);
                    Rational ratio =
                        Rational(partition_stats(lambda).centralizer_order) /
                        (Rational(partition_stats(alpha).centralizer_order) *
                         Rational(partition_stats(beta).centralizer_order));
                    CHECK(lhs == ratio * ClassFunction::indicator(m + n, lambda));
                }

    // inducing the trivial character of the full group is the identity
    ClassFunction triv2 = ClassFunction::from_function(GroupFunction::trivial_character(2));
    CHECK(induced_young_character(IntegerPartition({2}), false) == triv2);
    CHECK(triv2.value(IntegerPartition({2})) == Rational(1));
    CHECK(triv2.value(IntegerPartition({1, 1})) == Rational(1));
}

TEST_CASE("permutations agree with the cyclically labeled model") {
    // round trip between permutations and labeled partitions
    for (int n = 0; n <= 4; ++n)
        for (const Permutation& sigma : Permutation::all(n))
            CHECK(labeled_to_permutation(permutation_to_labeled(sigma)) == sigma);

    // the split of the labeled model matches the first-return coproduct
    SpeciesHopfMonoid perms(cyclic_labels());
    for (int n = 1; n <= 4; ++n) {
        GroundSet component = GroundSet::interval(n);
        for (const Permutation& sigma : Permutation::all(n))
            for (const auto& [s, t] : ordered_decompositions(component)) {
                auto [l, r] = perms.split(permutation_to_labeled(sigma), s, t);
                // direct first-return construction on each part
                auto direct = [&](const GroundSet& part) {
                    std::vector<std::pair<GroundSet, Label>> blocks;
                    std::vector<bool> seen(n + 1, false);
                    for (Atom start : part) {
                        if (seen[start]) continue;
                        std::vector<int> cycle;
                        int x = start;
                        do {
                            cycle.push_back(x);
                            seen[x] = true;
                            do x = sigma(x);
                            while (!part.contains(x));
                        } while (x != start);
                        GroundSet block(std::vector<Atom>(cycle.begin(), cycle.end()));
                        blocks.emplace_back(block, Label{LabelKind::Cyclic, cycle});
                    }
                    return LabeledSetPartition(part, blocks);
                };
                CHECK(l == direct(s));
                CHECK(r == direct(t));
            }
    }

    // products are disjoint unions of cycle systems
    SpeciesHopfMonoid& m = perms;
    Permutation a({2, 1});
    Permutation b({1, 3, 2});
    LabeledSetPartition la = permutation_to_labeled(a);
    Bijection shift(GroundSet::interval(3), GroundSet({3, 4, 5}), {3, 4, 5});
    LabeledSetPartition lb = m.relabel(shift, permutation_to_labeled(b));
    LabeledSetPartition product = m.merge(la, lb);
    CHECK(product.block_count() == 3);
}

TEST_CASE("dictionaries into functions") {
    auto perm = std::make_shared<SpeciesHopfMonoid>(cyclic_labels());
    GradedHopfAlgebra full(perm, GradedHopfAlgebra::Flavor::Full);
    GradedHopfAlgebra coinv(perm, GradedHopfAlgebra::Flavor::Coinvariant);

    Permutation swap({2, 1});
    auto f = iso_f(full, GradedElement::of(permutation_to_labeled(swap), Basis::P));
    CHECK(f.at(2) == GroupFunction::indicator(swap));

    auto fbar = iso_fbar(
        coinv, GradedElement::of(coinv.canonicalize_orbit(permutation_to_labeled(swap)),
                                 Basis::P));
    CHECK(fbar.at(2) == Rational(2) * ClassFunction::indicator(2, IntegerPartition({2})));

    // a long cycle's e index maps to the factorial multiple of the sign sum
    for (int n = 2; n <= 4; ++n) {
        std::vector<int> im(n);
        for (int i = 0; i < n; ++i) im[i] = i % n + 1 == n ? 1 : i + 2;
        Permutation cycle(im);
        REQUIRE(cycle.cycle_type() == IntegerPartition({n}));
        auto e_img = iso_fbar(
            coinv,
            GradedElement::of(coinv.canonicalize_orbit(permutation_to_labeled(cycle)),
                              Basis::E));
        ClassFunction expected(n);
        for (const auto& mu : integer_partitions(n))
            expected.add_value(mu, Rational(factorial(n) * partition_stats(mu).sign));
        CHECK(e_img.at(n) == expected);
    }
}

TEST_CASE("characteristic map") {
    CHECK(frobenius(Rational(2) * ClassFunction::indicator(2, IntegerPartition({2})))
              .terms.at(IntegerPartition({2})) == Rational(1));

    SymElement h2{Basis::H, {}};
    h2.add_term(IntegerPartition({2}), 1);
    CHECK(frobenius(ClassFunction::from_function(GroupFunction::trivial_character(2))) ==
          sym_convert(h2, Basis::P));

    SymElement e2{Basis::E, {}};
    e2.add_term(IntegerPartition({2}), 1);
    CHECK(frobenius(ClassFunction::from_function(GroupFunction::sign_character(2))) ==
          sym_convert(e2, Basis::P));

    for (int n = 0; n <= 4; ++n)
        for (const auto& lambda : integer_partitions(n)) {
            ClassFunction f = Rational(5, 3) * ClassFunction::indicator(n, lambda);
            CHECK(frobenius_inverse(frobenius(f)) == f);
        }
}

TEST_CASE("lifting map examples") {
    auto pi = std::make_shared<SpeciesHopfMonoid>(trivial_labels());
    GradedHopfAlgebra full(pi, GradedHopfAlgebra::Flavor::Full);

    SymElement p2{Basis::P, {}};
    p2.add_term(IntegerPartition({2}), 1);
    GradedElement image = lift_rho_tilde(p2);
    REQUIRE(image.terms().size() == 1);
    CHECK(image.coeff(with_trivial_labels(SetPartition::one_block(GroundSet({1, 2})))) ==
          Rational(2));

    SymElement m1{Basis::M, {}};
    m1.add_term(IntegerPartition({1}), 1);
    GradedElement m_image = full.convert(lift_rho_tilde(m1), Basis::M);
    REQUIRE(m_image.terms().size() == 1);
    CHECK(m_image.coeff(with_trivial_labels(SetPartition::one_block(GroundSet({1})))) ==
          Rational(1));

    // projecting back multiplies by the factorial of the degree
    for (int n = 1; n <= 3; ++n)
        for (const auto& lambda : integer_partitions(n)) {
            SymElement s{Basis::P, {}};
            s.add_term(lambda, 1);
            GradedElement lifted = lift_rho_tilde(s);
            MonomialPolynomial projected = rho(expand_graded_ncsym(lifted, n + 1));
            CHECK(projected == Rational(factorial(n)) * s.expansion(n + 1));
        }
}
