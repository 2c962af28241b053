#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "paracon/aflite.hpp"
#include "paracon/consistency.hpp"
#include "paracon/diversity.hpp"
#include "paracon/random.hpp"
#include "paracon/text.hpp"
#include "paracon/tree.hpp"

using namespace paracon;

namespace {

std::vector<BucketStats> random_stats(std::size_t buckets)
{
    Rng rng(1);
    std::vector<BucketStats> out(buckets);
    for (std::size_t i = 0; i < buckets; ++i) {
        out[i].problem_id = "b" + std::to_string(i);
        out[i].n = 1 + rng.uniform_index(12);
        out[i].n_correct = rng.uniform_index(out[i].n + 1);
    }
    return out;
}

ParseTree random_tree(Rng& rng, std::size_t depth)
{
    ParseTree t;
    t.label = std::string(1, static_cast<char>('A' + rng.uniform_index(6)));
    if (depth > 1) {
        const std::size_t kids = rng.uniform_index(4);
        for (std::size_t i = 0; i < kids; ++i) {
            t.children.push_back(random_tree(rng, depth - 1));
        }
    }
    return t;
}

std::string random_text(Rng& rng, std::size_t words)
{
    static const char* vocab[] = {"the", "cat", "sat", "on", "a", "mat", "dog", "ran", "far", "away"};
    std::string s;
    for (std::size_t i = 0; i < words; ++i) {
        s += (i ? " " : "") + std::string(vocab[rng.uniform_index(10)]);
    }
    return s;
}

void BM_EstimatePc(benchmark::State& state)
{
    const auto s = random_stats(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_pc(s, Weighting::size));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimatePc)->Arg(1000)->Arg(100000);

void BM_VarianceDecomposition(benchmark::State& state)
{
    const auto s = random_stats(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(variance_decomposition(s));
    }
}
BENCHMARK(BM_VarianceDecomposition)->Arg(100000);

void BM_Levenshtein(benchmark::State& state)
{
    Rng rng(2);
    const auto a = decode_utf8(random_text(rng, static_cast<std::size_t>(state.range(0))));
    const auto b = decode_utf8(random_text(rng, static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(levenshtein(a, b));
    }
}
BENCHMARK(BM_Levenshtein)->Arg(10)->Arg(100);

void BM_TreeEditDistance(benchmark::State& state)
{
    Rng rng(3);
    const auto a = random_tree(rng, static_cast<std::size_t>(state.range(0)));
    const auto b = random_tree(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tree_edit_distance(a, b));
    }
    state.counters["nodes"] = static_cast<double>(a.node_count() + b.node_count());
}
BENCHMARK(BM_TreeEditDistance)->Arg(3)->Arg(6);

void BM_AfliteFilter(benchmark::State& state)
{
    Rng rng(4);
    std::vector<EmbeddedExample> data(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < data.size(); ++i) {
        data[i].example_id = "e" + std::to_string(i);
        data[i].label = static_cast<int>(rng.uniform_index(2));
        for (int d = 0; d < 16; ++d) {
            data[i].vector.push_back(rng.normal() + (d == 0 && i % 4 == 0 ? (data[i].label ? 3.0 : -3.0) : 0.0));
        }
    }
    AfliteConfig config;
    config.n_ensemble = 16;
    config.m_train = data.size() / 4;
    config.k_remove = data.size() / 20;
    for (auto _ : state) {
        benchmark::DoNotOptimize(aflite_filter(data, config));
    }
}
BENCHMARK(BM_AfliteFilter)->Arg(1000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
