#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "codegb/code.hpp"
#include "codegb/cycles.hpp"
#include "codegb/groebner.hpp"

using namespace codegb;

namespace {

BinaryCode random_code(std::size_t n, std::size_t k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (;;) {
        std::vector<BitVec> rows;
        for (std::size_t r = 0; r < k; ++r) {
            BitVec row(n);
            for (std::size_t i = 0; i < n; ++i)
                if (rng() & 1u) row.set(i, true);
            rows.push_back(std::move(row));
        }
        BinaryCode code = BinaryCode::from_generator(BinaryMatrix::from_rows(std::move(rows), n));
        if (code.dimension() == k) return code;
    }
}

Graph random_graph(std::size_t vertices, std::size_t extra_edges, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t v = 2; v <= vertices; ++v) {
        const std::size_t u = 1 + rng() % (v - 1);
        edges.insert({u, v});
    }
    while (edges.size() < vertices - 1 + extra_edges) {
        const std::size_t u = 1 + rng() % vertices;
        const std::size_t v = 1 + rng() % vertices;
        if (u != v) edges.insert({std::min(u, v), std::max(u, v)});
    }
    return Graph(vertices, {edges.begin(), edges.end()});
}

void BM_ComputeBasis(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const BinaryCode code = random_code(n, n / 2, 99);
    for (auto _ : state) {
        GroebnerBasis gb = compute_groebner_basis(code);
        benchmark::DoNotOptimize(gb.staircase_size());
    }
    state.SetComplexityN(static_cast<std::int64_t>(n));
}
BENCHMARK(BM_ComputeBasis)->DenseRange(8, 24, 4)->Complexity();

void BM_CanonicalForm(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const BinaryCode code = random_code(n, n / 2, 7);
    const GroebnerBasis gb = compute_groebner_basis(code);
    std::mt19937_64 rng(13);
    std::vector<Word> words;
    for (int i = 0; i < 256; ++i) {
        BitVec v(n);
        for (std::size_t b = 0; b < n; ++b)
            if (rng() & 1u) v.set(b, true);
        words.push_back(Word::from_bits(v));
    }
    std::size_t next = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(words[next], gb));
        next = (next + 1) % words.size();
    }
}
BENCHMARK(BM_CanonicalForm)->DenseRange(8, 24, 8);

void BM_Syndrome(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const BinaryCode code = random_code(n, n / 2, 21);
    std::mt19937_64 rng(17);
    BitVec v(n);
    for (std::size_t b = 0; b < n; ++b)
        if (rng() & 1u) v.set(b, true);
    for (auto _ : state) benchmark::DoNotOptimize(code.syndrome(v));
}
BENCHMARK(BM_Syndrome)->RangeMultiplier(4)->Range(16, 256);

void BM_Decode(benchmark::State& state) {
    const BinaryCode code = random_code(16, 8, 31);
    const GroebnerBasis gb = compute_groebner_basis(code);
    std::mt19937_64 rng(37);
    std::vector<BitVec> words;
    for (int i = 0; i < 256; ++i) {
        BitVec v(16);
        for (std::size_t b = 0; b < 16; ++b)
            if (rng() & 1u) v.set(b, true);
        words.push_back(std::move(v));
    }
    std::size_t next = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(decode(gb, words[next]));
        next = (next + 1) % words.size();
    }
}
BENCHMARK(BM_Decode);

void BM_MinimalCycleBasis(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 6, 43);
    for (auto _ : state) {
        CycleBasis basis = minimal_cycle_basis(g);
        benchmark::DoNotOptimize(basis.total_length);
    }
}
BENCHMARK(BM_MinimalCycleBasis)->DenseRange(6, 12, 3);

}  // namespace

BENCHMARK_MAIN();
