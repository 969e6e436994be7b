#include "deltasys/ages.hpp"
#include "deltasys/catalog.hpp"
#include "deltasys/linorders.hpp"
#include "deltasys/setworld.hpp"
#include "deltasys/structure.hpp"
#include "deltasys/sunflower_property.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace deltasys;

namespace {

Structure random_graph(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng() % 2) {
                edges.emplace_back(i, j);
            }
        }
    }
    return make_graph(n, edges);
}

SetFamily random_family(std::size_t members, unsigned seed, bool uniform = false) {
    std::mt19937 rng(seed);
    std::vector<AtomSet> sets;
    while (sets.size() < members) {
        auto s = make_atom_set({Atom(int(rng() % 12)), Atom(int(rng() % 12)), Atom(int(rng() % 12))});
        if ((!uniform || s.size() == 3) && std::find(sets.begin(), sets.end(), s) == sets.end()) {
            sets.push_back(s);
        }
    }
    return SetFamily(sets);
}

} // namespace

static void BM_FindEmbeddings_P3(benchmark::State& state) {
    const auto host = random_graph(static_cast<std::size_t>(state.range(0)), 1);
    const auto target = path_graph(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_embeddings(target, host));
    }
}
BENCHMARK(BM_FindEmbeddings_P3)->Arg(8)->Arg(16)->Arg(32);

static void BM_CanonicalForm(benchmark::State& state) {
    const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(g));
    }
}
BENCHMARK(BM_CanonicalForm)->Arg(5)->Arg(7)->Arg(9);

static void BM_MaxSunflower(benchmark::State& state) {
    const auto f = random_family(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_sunflower(f));
    }
}
BENCHMARK(BM_MaxSunflower)->Arg(8)->Arg(16)->Arg(24);

static void BM_ErdosRadoExtract(benchmark::State& state) {
    const auto f = random_family(49, 4, true);
    for (auto _ : state) {
        benchmark::DoNotOptimize(erdos_rado_extract(f, 3));
    }
}
BENCHMARK(BM_ErdosRadoExtract);

static void BM_VerifyExact_EmptyGraphs(benchmark::State& state) {
    const auto b = empty_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_witness(b, empty_graph(3), 2, VerifyMode::exhaustive(), 1000000000));
    }
}
BENCHMARK(BM_VerifyExact_EmptyGraphs)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_BuildWitness_K3(benchmark::State& state) {
    for (auto _ : state) {
        BetaSource beta(AgeDescriptor::graphs(), 13);
        benchmark::DoNotOptimize(build_witness(AgeDescriptor::graphs(), complete_graph(3), 2, beta));
    }
}
BENCHMARK(BM_BuildWitness_K3)->Unit(benchmark::kMillisecond);

static void BM_Dap3Graphs(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_dap3(AgeDescriptor::graphs(), 3, DapStrategy::exhaustive));
    }
}
BENCHMARK(BM_Dap3Graphs)->Unit(benchmark::kMillisecond);

static void BM_ClassifyTerm(benchmark::State& state) {
    const auto t = parse_term("sum(w, w + 3 + w*) + sum(w*, 2) + w");
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_sunflowerable(t));
        benchmark::DoNotOptimize(scattered_rank(t));
    }
}
BENCHMARK(BM_ClassifyTerm);

BENCHMARK_MAIN();
