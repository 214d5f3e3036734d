#include <benchmark/benchmark.h>

#include "medalg/generators.hpp"
#include "medalg/graph.hpp"
#include "medalg/hom.hpp"
#include "medalg/order.hpp"

namespace {

using namespace medalg;

void BM_ValidateAxioms(benchmark::State& state) {
    MedianAlgebra a = chain(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(validate_axioms(a));
    }
}
BENCHMARK(BM_ValidateAxioms)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_TreeReport(benchmark::State& state) {
    // Balanced-ish binary tree.
    std::vector<int> parents(static_cast<std::size_t>(state.range(0)) - 1);
    for (std::size_t i = 0; i < parents.size(); ++i) {
        parents[i] = static_cast<int>(i) / 2;
    }
    MedianAlgebra a = tree_from_parents(parents);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tree_report(a));
    }
}
BENCHMARK(BM_TreeReport)->Arg(8)->Arg(16)->Arg(32);

void BM_AlgebraFromSemilattice(benchmark::State& state) {
    std::vector<int> parents(static_cast<std::size_t>(state.range(0)) - 1);
    for (std::size_t i = 0; i < parents.size(); ++i) {
        parents[i] = static_cast<int>(i) / 2;
    }
    SemilatticePresentation p;
    p.size = static_cast<int>(state.range(0));
    for (std::size_t i = 0; i < parents.size(); ++i) {
        p.covers.emplace_back(parents[i], static_cast<int>(i) + 1);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(algebra_from_semilattice(p));
    }
}
BENCHMARK(BM_AlgebraFromSemilattice)->Arg(8)->Arg(16)->Arg(32);

void BM_EnumerateHoms(benchmark::State& state) {
    ProductAlgebra dom = make_product({chain(2), chain(2)});
    MedianAlgebra cod = star(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_homs(dom, cod));
    }
}
BENCHMARK(BM_EnumerateHoms)->Arg(3)->Arg(4)->Arg(5);

void BM_IsMedianGraph(benchmark::State& state) {
    // Hypercube of the given dimension via a product of 2-chains.
    std::vector<MedianAlgebra> factors(static_cast<std::size_t>(state.range(0)),
                                       chain(2));
    CoveringGraph g = covering_graph(make_product(factors).flat(), 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_median_graph(g));
    }
}
BENCHMARK(BM_IsMedianGraph)->Arg(3)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
