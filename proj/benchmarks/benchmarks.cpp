#include <benchmark/benchmark.h>

#include <ferrers3d/diagram.hpp>
#include <ferrers3d/groebner.hpp>
#include <ferrers3d/rees.hpp>
#include <ferrers3d/runner.hpp>
#include <ferrers3d/simplicial.hpp>
#include <ferrers3d/toric.hpp>

using namespace ferrers3d;

namespace {

Diagram cube(int a, int b, int c) { return from_generators({Point{a, b, c}}); }

void BM_TwoMinors_Cube333(benchmark::State& state) {
    Diagram d = cube(3, 3, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(two_minors(d));
}
BENCHMARK(BM_TwoMinors_Cube333);

void BM_LexBasis_Switches_Cube333(benchmark::State& state) {
    Diagram d = cube(3, 3, 3);
    std::vector<Binomial> gens = two_minors(d).elements;
    MonomialOrder lex = MonomialOrder::lex();
    for (auto _ : state)
        benchmark::DoNotOptimize(buchberger(gens, lex));
}
BENCHMARK(BM_LexBasis_Switches_Cube333)->Unit(benchmark::kMillisecond);

void BM_Toric_Elimination_Minexam(benchmark::State& state) {
    Diagram d = example_diagram("minexam");
    MonomialOrder lex = MonomialOrder::lex();
    for (auto _ : state)
        benchmark::DoNotOptimize(toric_ideal(d, lex, ToricPipeline::elimination));
}
BENCHMARK(BM_Toric_Elimination_Minexam)->Unit(benchmark::kMillisecond);

void BM_Toric_Lattice_Minexam(benchmark::State& state) {
    Diagram d = example_diagram("minexam");
    MonomialOrder lex = MonomialOrder::lex();
    for (auto _ : state)
        benchmark::DoNotOptimize(toric_ideal(d, lex, ToricPipeline::lattice));
}
BENCHMARK(BM_Toric_Lattice_Minexam)->Unit(benchmark::kMillisecond);

void BM_Toric_Elimination_Closure(benchmark::State& state) {
    Diagram d = example_diagram("closure");
    MonomialOrder lex = MonomialOrder::lex();
    for (auto _ : state)
        benchmark::DoNotOptimize(toric_ideal(d, lex, ToricPipeline::elimination));
}
BENCHMARK(BM_Toric_Elimination_Closure)->Unit(benchmark::kMillisecond);

void BM_VertexDecomposition_Closure(benchmark::State& state) {
    Diagram d = example_diagram("closure");
    GroebnerBasis gb = toric_ideal(d, MonomialOrder::lex());
    SimplicialComplex delta = stanley_reisner(radical(initial_ideal(gb)));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_vertex_decomposable(delta));
}
BENCHMARK(BM_VertexDecomposition_Closure)->Unit(benchmark::kMillisecond);

void BM_Reisner_Closure(benchmark::State& state) {
    Diagram d = example_diagram("closure");
    GroebnerBasis gb = toric_ideal(d, MonomialOrder::lex());
    SimplicialComplex delta = stanley_reisner(radical(initial_ideal(gb)));
    for (auto _ : state)
        benchmark::DoNotOptimize(reisner_cm(delta));
}
BENCHMARK(BM_Reisner_Closure)->Unit(benchmark::kMillisecond);

void BM_Rees_Exchange_Closure(benchmark::State& state) {
    Diagram d = example_diagram("closure");
    MonomialOrder lex = MonomialOrder::lex();
    for (auto _ : state)
        benchmark::DoNotOptimize(rees_via_exchange(d, lex));
}
BENCHMARK(BM_Rees_Exchange_Closure)->Unit(benchmark::kMillisecond);

void BM_Rees_Oracle_Minexam(benchmark::State& state) {
    Diagram d = example_diagram("minexam");
    MonomialOrder lex = MonomialOrder::lex();
    for (auto _ : state)
        benchmark::DoNotOptimize(rees_oracle(d, lex));
}
BENCHMARK(BM_Rees_Oracle_Minexam)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
