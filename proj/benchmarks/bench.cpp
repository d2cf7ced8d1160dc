#include <benchmark/benchmark.h>

#include "ddgraph/canonical.hpp"
#include "ddgraph/construction.hpp"
#include "ddgraph/exact_rank.hpp"
#include "ddgraph/graph.hpp"
#include "ddgraph/graph6.hpp"
#include "ddgraph/hadamard.hpp"
#include "ddgraph/latin_square.hpp"
#include "ddgraph/spectrum.hpp"

using namespace ddgraph;

namespace {

ConstructionSpec spec56() { return default_spec(1, 2, 3, cayley_table({7})); }
ConstructionSpec spec378() { return default_spec(4, 3, 3, cayley_table({14})); }

void bm_construct_56(benchmark::State& state) {
  ConstructionSpec s = spec56();
  for (auto _ : state) benchmark::DoNotOptimize(construct(s).graph.edge_count());
}
BENCHMARK(bm_construct_56);

void bm_construct_378(benchmark::State& state) {
  ConstructionSpec s = spec378();
  for (auto _ : state) benchmark::DoNotOptimize(construct(s).graph.edge_count());
}
BENCHMARK(bm_construct_378);

void bm_verify_ddg_56(benchmark::State& state) {
  ConstructionResult r = construct(spec56());
  for (auto _ : state) benchmark::DoNotOptimize(verify_ddg(r.graph).params.v);
}
BENCHMARK(bm_verify_ddg_56);

void bm_verify_srg_378(benchmark::State& state) {
  ConstructionResult r = construct(spec378());
  for (auto _ : state) benchmark::DoNotOptimize(verify_srg(r.graph).v);
}
BENCHMARK(bm_verify_srg_378);

void bm_p_rank_2_378(benchmark::State& state) {
  ConstructionResult r = construct(spec378());
  for (auto _ : state) benchmark::DoNotOptimize(p_rank(r.graph, 2));
}
BENCHMARK(bm_p_rank_2_378);

void bm_p_rank_3_378(benchmark::State& state) {
  ConstructionResult r = construct(spec378());
  for (auto _ : state) benchmark::DoNotOptimize(p_rank(r.graph, 3));
}
BENCHMARK(bm_p_rank_3_378);

void bm_exact_multiplicity_64(benchmark::State& state) {
  ConstructionResult r = construct(default_spec(3, 2, 3, cayley_table({2, 2, 2})));
  for (auto _ : state) benchmark::DoNotOptimize(exact_multiplicity(r.graph, 4));
}
BENCHMARK(bm_exact_multiplicity_64);

void bm_canonical_form_56(benchmark::State& state) {
  ConstructionResult r = construct(spec56());
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(r.graph).certificate.size());
}
BENCHMARK(bm_canonical_form_56);

void bm_spectrum_56(benchmark::State& state) {
  ConstructionResult r = construct(spec56());
  for (auto _ : state) benchmark::DoNotOptimize(graph_spectrum(r.graph, r.params).entries.size());
}
BENCHMARK(bm_spectrum_56);

void bm_graph6_roundtrip_378(benchmark::State& state) {
  Graph g = construct(spec378()).graph;
  for (auto _ : state) benchmark::DoNotOptimize(graph6_decode(graph6_encode(g)).n());
}
BENCHMARK(bm_graph6_roundtrip_378);

void bm_hadamard_roundtrip_64(benchmark::State& state) {
  Graph g = construct(default_spec(3, 2, 3, cayley_table({2, 2, 2}))).graph;
  for (auto _ : state) {
    HadamardFromSrg h = srg_to_hadamard(g);
    benchmark::DoNotOptimize(hadamard_to_srg(h.h, h.sign).graph.n());
  }
}
BENCHMARK(bm_hadamard_roundtrip_64);

}  // namespace

BENCHMARK_MAIN();
