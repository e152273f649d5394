// Serial reference path vs the OpenMP path on the same degree boxes.
// K4COH_THREADS sets the worker count of the parallel runs.

#include <benchmark/benchmark.h>

#include "k4/audit.hpp"
#include "k4/catalog.hpp"

using namespace k4;

namespace {

template <Exec E>
void BM_audit_les(benchmark::State& st) {
    auto box = degree_box(static_cast<int>(st.range(0)));
    const Catalog& cat = Catalog::builtin();
    for (auto _ : st) benchmark::DoNotOptimize(audit_les(cat, "eqcof2", box, E));
    st.counters["degrees"] = static_cast<double>(box.size());
}

template <Exec E>
void BM_audit_presentations(benchmark::State& st) {
    auto box = degree_box(static_cast<int>(st.range(0)));
    const Catalog& cat = Catalog::builtin();
    for (auto _ : st) benchmark::DoNotOptimize(audit_presentations(cat, box, E));
    st.counters["degrees"] = static_cast<double>(box.size());
}

template <Exec E>
void BM_audit_delta_u(benchmark::State& st) {
    auto box = degree_box(static_cast<int>(st.range(0)));
    const Catalog& cat = Catalog::builtin();
    for (auto _ : st) benchmark::DoNotOptimize(audit_delta_u(cat, box, E));
    st.counters["degrees"] = static_cast<double>(box.size());
}

template <Exec E>
void BM_dimension_sweep(benchmark::State& st) {
    auto box = degree_box(static_cast<int>(st.range(0)));
    const auto& obj = Catalog::builtin().object("EC2");
    for (auto _ : st) benchmark::DoNotOptimize(dimension_table(obj, box, E));
    st.counters["degrees"] = static_cast<double>(box.size());
}

}  // namespace

BENCHMARK(BM_audit_les<Exec::Serial>)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_audit_les<Exec::Parallel>)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_audit_presentations<Exec::Serial>)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_audit_presentations<Exec::Parallel>)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_audit_delta_u<Exec::Serial>)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_audit_delta_u<Exec::Parallel>)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dimension_sweep<Exec::Serial>)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dimension_sweep<Exec::Parallel>)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
