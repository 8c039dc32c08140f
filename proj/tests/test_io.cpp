#include "doctest.h"

#include "sphopf/io.hpp"

#include <memory>
#include <sstream>

using namespace sphopf;

TEST_CASE("element json matches the documented schema") {
    SpeciesHopfMonoid pi(trivial_labels());
    GroundSet g({1, 2});
    Element x = pi.convert(
        Element::of(with_trivial_labels(SetPartition::one_block(g)), Basis::P),
        Basis::Natural);
    const char* expected = R"({
  "component": [
    1,
    2
  ],
  "basis": "natural",
  "terms": [
    {
      "blocks": [
        {
          "atoms": [
            1
          ],
          "label": "·"
        },
        {
          "atoms": [
            2
          ],
          "label": "·"
        }
      ],
      "coeff": "-1/1"
    },
    {
      "blocks": [
        {
          "atoms": [
            1,
            2
          ],
          "label": "·"
        }
      ],
      "coeff": "1/1"
    }
  ]
})";
    CHECK(element_to_json(pi, x) == expected);
}

TEST_CASE("class function json") {
    ClassFunction f(2);
    f.add_value(IntegerPartition({2}), Rational(1, 2));
    f.add_value(IntegerPartition({1, 1}), Rational(3));
    const char* expected = R"([
  {
    "cycle_type": [
      1,
      1
    ],
    "value": "3/1"
  },
  {
    "cycle_type": [
      2
    ],
    "value": "1/2"
  }
])";
    CHECK(class_function_to_json(f) == expected);
}

TEST_CASE("structure table csv") {
    auto monoid = std::make_shared<SpeciesHopfMonoid>(trivial_labels());
    GradedHopfAlgebra coinv(monoid, GradedHopfAlgebra::Flavor::Coinvariant);
    std::string csv = structure_table_to_csv(*monoid, coinv.product_table(Basis::P, 1, 1));
    CHECK(csv == "product[p],1 2,1|2\n1 * 1,0/1,1/1\n");
}

TEST_CASE("hasse diagrams") {
    SpeciesHopfMonoid pi(trivial_labels());
    auto cp = pi.component_poset(GroundSet::interval(3));
    std::string dot = poset_to_dot(pi, *cp);
    CHECK(dot.find("digraph hasse") == 0);
    // five nodes and six covers in the refinement lattice on three atoms
    int nodes = 0, edges = 0;
    std::istringstream in(dot);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find("->") != std::string::npos)
            ++edges;
        else if (line.find('"') != std::string::npos)
            ++nodes;
    }
    CHECK(nodes == 5);
    CHECK(edges == 6);
}

TEST_CASE("dimension csv") {
    std::vector<DimensionRow> rows;
    for (int n = 0; n <= 5; ++n)
        rows.push_back({"USL", n, 2, sc_dimension(ScModel::USL, n, 2)});
    CHECK(dimensions_to_csv(rows) ==
          "model,n,q,dimension\n"
          "USL,0,2,1\nUSL,1,2,1\nUSL,2,2,2\nUSL,3,2,5\nUSL,4,2,15\nUSL,5,2,52\n");
}

TEST_CASE("pretty printers") {
    WordPolynomial f(3);
    f.add_term({1, 2, 1}, 1);
    f.add_term({}, Rational(2));
    CHECK(pretty(f) == "2/1*1 + x1 x2 x1");

    MonomialPolynomial g(3);
    g.add_term({2, 0, 1}, 1);
    CHECK(pretty(g) == "x1^2 x3");
}

TEST_CASE("index literals parse back") {
    for (const auto& selector : {"orbit:2", "cyclic", "trivial",
                                 "sum:signed-orbit:1+map:1"}) {
        SpeciesHopfMonoid monoid(parse_species(selector));
        for (const auto& x : monoid.enumerate_component(GroundSet::interval(3)))
            CHECK(parse_labeled(monoid, monoid.encode(x)) == x);
    }
    SpeciesHopfMonoid pi(parse_species("trivial"));
    CHECK(parse_labeled(pi, "{}") == LabeledSetPartition{});
    CHECK_THROWS_AS(parse_labeled(pi, "1 2=0,1"), std::invalid_argument);
}
