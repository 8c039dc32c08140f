#include <benchmark/benchmark.h>

#include "sphopf/fock.hpp"
#include "sphopf/symfun.hpp"

#include <memory>

using namespace sphopf;

static void BM_ComponentPoset(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SpeciesHopfMonoid monoid(trivial_labels());
        auto cp = monoid.component_poset(GroundSet::interval(n));
        benchmark::DoNotOptimize(cp->size());
    }
}
BENCHMARK(BM_ComponentPoset)->Arg(4)->Arg(5)->Arg(6);

static void BM_BasisConversion(benchmark::State& state) {
    SpeciesHopfMonoid monoid(orbit_labels(cyclic_group(2)));
    GroundSet component = GroundSet::interval(static_cast<int>(state.range(0)));
    Element x(component, Basis::Natural);
    for (const auto& t : monoid.enumerate_component(component)) x.add_term(t, 1);
    monoid.component_poset(component);  // build the cache outside the loop
    for (auto _ : state) {
        Element e = monoid.convert(x, Basis::E);
        benchmark::DoNotOptimize(monoid.convert(e, Basis::Natural).terms().size());
    }
}
BENCHMARK(BM_BasisConversion)->Arg(3)->Arg(4);

static void BM_CoinvariantProductTable(benchmark::State& state) {
    auto monoid = std::make_shared<SpeciesHopfMonoid>(trivial_labels());
    GradedHopfAlgebra coinv(monoid, GradedHopfAlgebra::Flavor::Coinvariant);
    for (auto _ : state) {
        StructureTable t = coinv.product_table(Basis::M, 2, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(t.cells.size());
    }
}
BENCHMARK(BM_CoinvariantProductTable)->Arg(2)->Arg(3);

static void BM_WordExpansion(benchmark::State& state) {
    SetPartition shape(GroundSet({1, 2, 3, 4}), {GroundSet({1, 3}), GroundSet({2, 4})});
    for (auto _ : state) {
        WordPolynomial h = expand_ncsym(Basis::H, shape, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(h.terms().size());
    }
}
BENCHMARK(BM_WordExpansion)->Arg(5)->Arg(8);

BENCHMARK_MAIN();
