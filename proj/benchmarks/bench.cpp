#include <benchmark/benchmark.h>

#include "eldef/definability.hpp"
#include "eldef/syntax.hpp"

using namespace eldef;

namespace {

const Ontology& cuisine() {
    static const Ontology o = parse_ontology(
        "Ontology(SubClassOf(ObjectIntersectionOf(Dumplings Entree) Gnocci) SubClassOf(Gnocci Dumplings) "
        "SubClassOf(Dumplings Entree))");
    return o;
}

void BM_SaturateFamily(benchmark::State& state, RuleSystem system) {
    const auto fam = generate_family(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(saturate(fam.ontology, {fam.target}, system).conclusions().size());
}
BENCHMARK_CAPTURE(BM_SaturateFamily, A, RuleSystem::A)->DenseRange(1, 4);
BENCHMARK_CAPTURE(BM_SaturateFamily, B, RuleSystem::B)->DenseRange(1, 4);

void BM_DefineFamily(benchmark::State& state) {
    const auto fam = generate_family(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto r = define(fam.ontology, fam.target, fam.sigma);
        state.counters["definitions"] = static_cast<double>(r.definitions.size());
    }
}
BENCHMARK(BM_DefineFamily)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_DefineCuisine(benchmark::State& state) {
    const Concept c = make_conj(Concept::name("Dumplings"), Concept::name("Entree"));
    const Signature sigma{Symbol::concept_name("Gnocci"), Symbol::concept_name("Entree")};
    for (auto _ : state) benchmark::DoNotOptimize(define(cuisine(), c, sigma).definitions.size());
}
BENCHMARK(BM_DefineCuisine);

void BM_IsDefinableFamily(benchmark::State& state, RuleSystem system) {
    const auto fam = generate_family(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_definable(fam.ontology, fam.target, fam.sigma, system));
}
BENCHMARK_CAPTURE(BM_IsDefinableFamily, A, RuleSystem::A)->DenseRange(1, 4);
BENCHMARK_CAPTURE(BM_IsDefinableFamily, B, RuleSystem::B)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
