#include <benchmark/benchmark.h>

#include "sombor/certificate.hpp"
#include "sombor/constructions.hpp"
#include "sombor/enumeration.hpp"
#include "sombor/indices.hpp"

using namespace sombor;

static void BM_EnumerateUnicyclic(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto classes = enumerate_unicyclic(n);
        benchmark::DoNotOptimize(classes);
        state.counters["classes"] = static_cast<double>(classes.size());
    }
}
BENCHMARK(BM_EnumerateUnicyclic)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_EnumerateLabeled(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto certs = enumerate_unicyclic_labeled(n);
        benchmark::DoNotOptimize(certs);
    }
}
BENCHMARK(BM_EnumerateLabeled)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_CertificateCycle(benchmark::State& state) {
    const Graph g = build_cycle(12);
    for (auto _ : state) {
        auto cert = canonical_certificate(g);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_CertificateCycle);

static void BM_CertificatePendantHeavy(benchmark::State& state) {
    const Graph g = build_triangle_pendants(12, 3, 3, 3);
    for (auto _ : state) {
        auto cert = canonical_certificate(g);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_CertificatePendantHeavy);

static void BM_CertificateDiameterFamily(benchmark::State& state) {
    const Graph g = build_diameter_max_family(12, 6);
    for (auto _ : state) {
        auto cert = canonical_certificate(g);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_CertificateDiameterFamily);

static void BM_ExtremalSearch(benchmark::State& state) {
    for (auto _ : state) {
        auto record = extremal_record(9, std::nullopt, IndexKind::Sombor, Direction::Max);
        benchmark::DoNotOptimize(record);
    }
}
BENCHMARK(BM_ExtremalSearch)->Unit(benchmark::kMillisecond);

static void BM_IndexLargeFamily(benchmark::State& state) {
    const Graph g = build_diameter_max_family(200, 100);
    for (auto _ : state) {
        auto value = index_value(g, IndexKind::Sombor);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_IndexLargeFamily);
