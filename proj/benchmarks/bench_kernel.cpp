#include <benchmark/benchmark.h>

#include "arrowcat/catspec.hpp"
#include "arrowcat/equivalence.hpp"
#include "arrowcat/generators.hpp"

using namespace arrowcat;

static void BM_ValidateFinSet(benchmark::State& state) {
    const auto data = to_objectless(gen_finset(static_cast<std::size_t>(state.range(0)))).data();
    for (auto _ : state) benchmark::DoNotOptimize(validate_objectless(data));
    state.counters["morphisms"] = static_cast<double>(data.morphisms.size());
}
BENCHMARK(BM_ValidateFinSet)->DenseRange(1, 3);

static void BM_ValidateCoproduct(benchmark::State& state) {
    std::vector<ObjlessData> parts(static_cast<std::size_t>(state.range(0)), gen_walking_iso());
    const auto data = coproduct("Sum", parts);
    for (auto _ : state) benchmark::DoNotOptimize(validate_objectless(data));
    state.counters["morphisms"] = static_cast<double>(data.morphisms.size());
}
BENCHMARK(BM_ValidateCoproduct)->RangeMultiplier(4)->Range(4, 256);

static void BM_Skeleton(benchmark::State& state) {
    auto c = share(to_objectless(gen_finset(3, {1, 2})));
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(skeleton(c, seed++));
    state.counters["morphisms"] = static_cast<double>(c->size());
}
BENCHMARK(BM_Skeleton);

static void BM_IsoSearch(benchmark::State& state) {
    auto c = share(to_objectless(gen_finset(static_cast<std::size_t>(state.range(0)))));
    for (auto _ : state) benchmark::DoNotOptimize(find_category_isomorphism(c, c, 4096));
    state.counters["morphisms"] = static_cast<double>(c->size());
}
BENCHMARK(BM_IsoSearch)->DenseRange(1, 3);

static void BM_Equivalence(benchmark::State& state) {
    auto a = share(to_objectless(gen_finset(2, {1, 2})));
    auto b = share(to_objectless(gen_finset(2)));
    for (auto _ : state) benchmark::DoNotOptimize(are_equivalent(a, b));
}
BENCHMARK(BM_Equivalence);

static void BM_BruteForceEquivalence(benchmark::State& state) {
    auto a = share(Category(gen_walking_iso()));
    auto b = share(Category(coproduct("Sum", {gen_walking_iso(), gen_discrete(1)})));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_equivalence(a, b));
}
BENCHMARK(BM_BruteForceEquivalence);

static void BM_ParseSerialize(benchmark::State& state) {
    catspec::Document doc;
    auto fin = gen_finset(static_cast<std::size_t>(state.range(0)));
    doc.categories.emplace(fin.name, fin);
    const auto text = catspec::serialize(doc);
    for (auto _ : state) benchmark::DoNotOptimize(catspec::serialize(catspec::parse(text)));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseSerialize)->DenseRange(1, 3);
BENCHMARK_MAIN();
