#include "doctest.h"

#include "sphopf/symfun.hpp"

#include <algorithm>

using namespace sphopf;

namespace {

SetPartition one_block2() { return SetPartition::one_block(GroundSet({1, 2})); }

}  // namespace

TEST_CASE("noncommuting expansions, degree one and two") {
    WordPolynomial m1 = expand_ncsym(Basis::M, SetPartition::one_block(GroundSet({1})), 2);
    CHECK(m1.terms().size() == 2);
    CHECK(m1.terms().at({1}) == Rational(1));
    CHECK(m1.terms().at({2}) == Rational(1));

    WordPolynomial p = expand_ncsym(Basis::P, one_block2(), 2);
    CHECK(p.terms().size() == 2);
    CHECK(p.terms().at({1, 1}) == Rational(1));
    CHECK(p.terms().at({2, 2}) == Rational(1));
    CHECK(expand_ncsym(Basis::M, one_block2(), 2) == p);

    WordPolynomial e = expand_ncsym(Basis::E, one_block2(), 2);
    CHECK(e.terms().size() == 2);
    CHECK(e.terms().at({1, 2}) == Rational(1));
    CHECK(e.terms().at({2, 1}) == Rational(1));

    WordPolynomial h = expand_ncsym(Basis::H, one_block2(), 1);
    CHECK(h.terms().size() == 1);
    CHECK(h.terms().at({1, 1}) == Rational(2));
}

TEST_CASE("the h coefficient counts fiber orderings, by brute force") {
    // independent oracle: enumerate functions and, for each fiber inside a
    // block, enumerate its linear orderings explicitly
    SetPartition shape(GroundSet({1, 2, 3}), {GroundSet({1, 3}), GroundSet({2})});
    const int k = 2;
    WordPolynomial expected(k);
    std::vector<int> f(3, 1);
    while (true) {
        long long orderings = 1;
        for (const GroundSet& b : shape.blocks())
            for (int letter = 1; letter <= k; ++letter) {
                std::vector<int> fiber;
                for (Atom a : b)
                    if (f[a - 1] == letter) fiber.push_back(a);
                long long count = 0;
                std::sort(fiber.begin(), fiber.end());
                if (fiber.empty()) continue;
                do ++count;
                while (std::next_permutation(fiber.begin(), fiber.end()));
                orderings *= count;
            }
        expected.add_term(f, orderings);
        int i = 2;
        while (i >= 0 && f[i] == k) f[i--] = 1;
        if (i < 0) break;
        ++f[i];
    }
    CHECK(expand_ncsym(Basis::H, shape, k) == expected);
}

TEST_CASE("commuting expansions") {
    MonomialPolynomial p2 = expand_sym(Basis::P, IntegerPartition({2}), 2);
    CHECK(p2.terms().size() == 2);
    CHECK(p2.terms().at({2, 0}) == Rational(1));
    CHECK(p2.terms().at({0, 2}) == Rational(1));

    MonomialPolynomial e2 = expand_sym(Basis::E, IntegerPartition({2}), 3);
    CHECK(e2.terms().size() == 3);
    CHECK(e2.terms().at({1, 1, 0}) == Rational(1));
    CHECK(e2.terms().at({1, 0, 1}) == Rational(1));
    CHECK(e2.terms().at({0, 1, 1}) == Rational(1));

    MonomialPolynomial h2 = expand_sym(Basis::H, IntegerPartition({2}), 2);
    CHECK(h2.terms().size() == 3);
    CHECK(h2.terms().at({1, 1}) == Rational(1));
    CHECK(h2.terms().at({2, 0}) == Rational(1));

    MonomialPolynomial m21 = expand_sym(Basis::M, IntegerPartition({2, 1}), 3);
    CHECK(m21.terms().size() == 6);
    CHECK(m21.terms().at({2, 1, 0}) == Rational(1));
    CHECK(m21.terms().at({1, 2, 0}) == Rational(1));
}

TEST_CASE("letting variables commute") {
    WordPolynomial f(2);
    f.add_term({1, 2}, 1);
    f.add_term({2, 1}, 1);
    MonomialPolynomial g = rho(f);
    CHECK(g.terms().size() == 1);
    CHECK(g.terms().at({1, 1}) == Rational(2));

    for (int k : {2, 3}) {
        CHECK(rho(expand_ncsym(Basis::P, one_block2(), k)) ==
              expand_sym(Basis::P, IntegerPartition({2}), k));
    }
    // the monomial image picks up the multiplicity factorial
    SetPartition type21(GroundSet({1, 2, 3}), {GroundSet({1, 3}), GroundSet({2})});
    CHECK(rho(expand_ncsym(Basis::M, type21, 4)) ==
          expand_sym(Basis::M, IntegerPartition({2, 1}), 4));
    SetPartition type11(GroundSet({1, 2}), {GroundSet({1}), GroundSet({2})});
    CHECK(rho(expand_ncsym(Basis::M, type11, 3)) ==
          Rational(2) * expand_sym(Basis::M, IntegerPartition({1, 1}), 3));
}

TEST_CASE("alphabet splitting") {
    WordPolynomial f(4);  // interleaved alphabet x1 y1 x2 y2
    f.add_term({1, 2}, 1);  // x1 y1
    f.add_term({3, 1}, 5);  // x2 x1
    auto split = split_alphabet(f);
    CHECK(split.size() == 2);
    CHECK(split.at({{1}, {1}}) == Rational(1));
    CHECK(split.at({{2, 1}, {}}) == Rational(5));

    MonomialPolynomial g(4);
    g.add_term({1, 0, 2, 3}, 7);
    auto msplit = split_alphabet(g);
    CHECK(msplit.at({{1, 2}, {0, 3}}) == Rational(7));
}

TEST_CASE("word products stay consistent as the alphabet grows") {
    CHECK(verify_f_iso(2, 2).ok());
    CHECK(verify_f_iso(2, 3).ok());
    CHECK(verify_f_iso(3, 3).ok());
}

TEST_CASE("classical base changes at small degree") {
    SymElement h2{Basis::H, {}};
    h2.add_term(IntegerPartition({2}), 1);
    SymElement h2p = sym_convert(h2, Basis::P);
    CHECK(h2p.terms.at(IntegerPartition({2})) == Rational(1, 2));
    CHECK(h2p.terms.at(IntegerPartition({1, 1})) == Rational(1, 2));

    SymElement e2{Basis::E, {}};
    e2.add_term(IntegerPartition({2}), 1);
    SymElement e2p = sym_convert(e2, Basis::P);
    CHECK(e2p.terms.at(IntegerPartition({2})) == Rational(-1, 2));
    CHECK(e2p.terms.at(IntegerPartition({1, 1})) == Rational(1, 2));

    SymElement m21{Basis::M, {}};
    m21.add_term(IntegerPartition({2, 1}), 1);
    SymElement m21p = sym_convert(m21, Basis::P);
    CHECK(m21p.terms.at(IntegerPartition({2, 1})) == Rational(1));
    CHECK(m21p.terms.at(IntegerPartition({3})) == Rational(-1));

    // round trips across all bases at weights up to 4
    const Basis bases[] = {Basis::M, Basis::P, Basis::E, Basis::H};
    for (int n = 1; n <= 4; ++n)
        for (const auto& lambda : integer_partitions(n))
            for (Basis from : bases) {
                SymElement s{from, {}};
                s.add_term(lambda, Rational(3, 7));
                for (Basis to : bases)
                    CHECK(sym_convert(sym_convert(s, to), from) == s);
            }
}

TEST_CASE("expansions are compatible with engine basis conversions") {
    // expanding an element is independent of the pair (basis, coordinates)
    // used to present it
    SpeciesHopfMonoid pi(trivial_labels());
    const Basis bases[] = {Basis::M, Basis::P, Basis::E, Basis::H};
    const int k = 4;
    for (int n = 1; n <= 3; ++n)
        for (const auto& x : pi.enumerate_component(GroundSet::interval(n)))
            for (Basis from : bases) {
                WordPolynomial direct = expand_ncsym(from, x.shape(), k);
                for (Basis to : bases) {
                    Element converted = pi.convert(Element::of(x, from), to);
                    WordPolynomial via(k);
                    for (const auto& [t, c] : converted.terms())
                        via += c * expand_ncsym(to, t.shape(), k);
                    CHECK(via == direct);
                }
            }
}

TEST_CASE("the dictionary scalars") {
    CHECK(coinvariant_scalar(Basis::P, IntegerPartition({3, 1})) == Rational(1));
    CHECK(coinvariant_scalar(Basis::M, IntegerPartition({1, 1})) == Rational(2));
    CHECK(coinvariant_scalar(Basis::E, IntegerPartition({2})) == Rational(2));
    CHECK(coinvariant_scalar(Basis::H, IntegerPartition({2, 2})) == Rational(4));
}
